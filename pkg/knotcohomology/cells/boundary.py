# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

"""
boundary of a nested cell

a codimension one face merges two adjacent groups with a common parent on
one level and interleaves their blocks on the next level (their points if
the level is the last one) in all order preserving ways

cells are oriented by the coordinates of their groups, level by level, then
by the last coordinates of the points in lexicographic point order. moving a
group past its left neighbor of the same level and exchanging two blocks of
the merged group both permute these coordinates, which gives the sign
"""

import logging
from copy import deepcopy
from itertools import combinations

import numpy as np

from .nested import NestedCell
from ..errors import InvalidInputError

logger = logging.getLogger("knotcohomology.cells")

# sign relating the orientation of a face to the induced boundary orientation
orientation_constant = 1


class BoundaryTerm:
    def __init__(self, face, sign, permutation):
        self.face = face
        self.sign = sign
        self.permutation = permutation

    def __repr__(self):
        return f"BoundaryTerm({self.face.name}, {self.sign:+d}, {self.permutation})"


def _get(tree, path):
    for i in path:
        tree = tree[i]
    return tree


def _level_groups(tree, level):
    """
    positions (path of the parent, index) of all groups on a level,
    in lexicographic order
    """
    groups = [((), j) for j in range(len(tree))]
    for _ in range(level - 1):
        groups = [
            (path + (j,), i)
            for path, j in groups
            for i in range(len(_get(tree, path + (j,))))
        ]
    return groups


def _coordinate_counts(block, level, k):
    """
    number of coordinates that a block of the given level carries on this
    and every deeper level, points last
    """
    if isinstance(block, int):
        return [1]
    if level == k - 1:
        return [1, len(block)]
    below = [_coordinate_counts(child, level + 1, k) for child in block]
    return [1] + [sum(counts[i] for counts in below) for i in range(len(below[0]))]


def _points(tree):
    if isinstance(tree, int):
        return [tree]
    return [p for child in tree for p in _points(child)]


def boundary_terms(cell):
    """
    every face of the cell with the orientation sign and the permutation
    taking the point labels of the cell to the point labels of the face
    """
    k = cell.k
    tree = cell.tree()
    counts = cell.group_counts

    terms = []
    for level in range(1, k):
        preceding = sum(counts[:level - 1])

        for g, (path, j) in enumerate(_level_groups(tree, level), start=1):
            parent = _get(tree, path)
            if j + 1 >= len(parent):
                continue

            left, right = parent[j], parent[j + 1]
            p, q = len(left), len(right)

            left_counts = [_coordinate_counts(x, level + 1, k) for x in left]
            right_counts = [_coordinate_counts(y, level + 1, k) for y in right]

            prefactor = orientation_constant * (-1) ** (preceding + g + 1)

            for positions in combinations(range(p + q), p):
                merged = []
                origin = []
                li, ri = iter(range(p)), iter(range(q))
                for slot in range(p + q):
                    if slot in positions:
                        x = next(li)
                        merged.append(left[x])
                        origin.append(("left", x))
                    else:
                        y = next(ri)
                        merged.append(right[y])
                        origin.append(("right", y))

                exponent = 0
                for a, b in combinations(range(p + q), 2):
                    (side_a, ia), (side_b, ib) = origin[a], origin[b]
                    if side_a == "right" and side_b == "left":
                        exponent += int(np.dot(left_counts[ib], right_counts[ia]))

                face_tree = deepcopy(tree)
                face_parent = _get(face_tree, path)
                face_parent[j:j + 2] = [deepcopy(merged)]

                order = _points(face_tree)
                position = {label: i + 1 for i, label in enumerate(order)}
                permutation = tuple(position[i] for i in range(1, cell.n + 1))

                face = NestedCell.from_tree(k, face_tree)
                terms.append(BoundaryTerm(face, prefactor * (-1) ** exponent, permutation))

    return terms


def fuks_boundary(cell, rep):
    """
    boundary of a cell with coefficients in a representation, as a map from
    face to the coefficient matrix acting on the fiber
    """
    if rep.n != cell.n:
        raise InvalidInputError(f"Representation of S({rep.n}) does not match cell with {cell.n} points")

    result = dict()
    for term in boundary_terms(cell):
        matrix = term.sign * rep.evaluate(term.permutation)
        if term.face in result:
            result[term.face] = result[term.face] + matrix
        else:
            result[term.face] = matrix

    return {face: matrix for face, matrix in result.items() if np.any(matrix != 0)}

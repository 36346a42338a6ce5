# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

"""
cells of the Fox-Neuwirth-Fuks decomposition of the configuration space of
n unordered points in R^k

a cell is a nested composition of n of depth k - 1. the first level groups
the points by their first coordinate, each group is composed further by the
next coordinate, and the points of a group of the last level are ordered by
the last coordinate. for k = 2 a cell is a plain composition (a_1, ..., a_m)
"""

import re
from functools import lru_cache
from itertools import product

from ..errors import InvalidInputError


def compositions(n):
    """
    ordered compositions of n, the one with the largest first part first
    """
    if n == 0:
        return [()]
    result = []
    for first in range(n, 0, -1):
        for rest in compositions(n - first):
            result.append((first,) + rest)
    return result


@lru_cache(maxsize=None)
def _structures(depth, n):
    if depth == 1:
        return tuple(compositions(n))
    result = []
    for parts in compositions(n):
        for children in product(*(_structures(depth - 1, a) for a in parts)):
            result.append(tuple(children))
    return tuple(result)


def _size(structure):
    return sum(x if isinstance(x, int) else _size(x) for x in structure)


def _group_counts(structure, depth):
    """
    number of groups on each level, the last entry counts the points
    """
    counts = [len(structure)]
    if depth == 1:
        counts.append(sum(structure))
        return counts
    below = [_group_counts(child, depth - 1) for child in structure]
    for level in range(depth):
        counts.append(sum(b[level] for b in below))
    return counts


def _render(x):
    if isinstance(x, int):
        return str(x)
    return "[" + ",".join(_render(y) for y in x) + "]"


_token = re.compile(r"\[|\]|,|\d+")


def _parse_structure(text):
    tokens = _token.findall(text)
    if "".join(tokens) != re.sub(r"\s", "", text):
        raise InvalidInputError(f'Cannot parse cell structure "{text}"')

    position = 0

    def parse_list():
        nonlocal position
        items = []
        while True:
            token = tokens[position] if position < len(tokens) else None
            if token == "[":
                position += 1
                items.append(parse_list())
                if position >= len(tokens) or tokens[position] != "]":
                    raise InvalidInputError(f'Unbalanced brackets in "{text}"')
                position += 1
            elif token is not None and token.isdigit():
                items.append(int(token))
                position += 1
            else:
                raise InvalidInputError(f'Unexpected token in "{text}"')
            if position < len(tokens) and tokens[position] == ",":
                position += 1
                continue
            return tuple(items)

    structure = parse_list()
    if position != len(tokens):
        raise InvalidInputError(f'Trailing characters in "{text}"')
    return structure


class NestedCell:
    def __init__(self, k, structure):
        k = int(k)
        if k < 2:
            raise InvalidInputError(f"Coordinate depth must be at least 2, got {k}")

        structure = self._validate(structure, k - 1)

        self.k = k
        self.structure = structure
        self.n = _size(structure)

    @staticmethod
    def _validate(structure, depth):
        if not isinstance(structure, (tuple, list)) or len(structure) == 0:
            raise InvalidInputError(f"Invalid cell structure {structure!r}")
        if depth == 1:
            if not all(isinstance(a, int) and a >= 1 for a in structure):
                raise InvalidInputError(f"Last level parts must be positive integers, got {structure!r}")
            return tuple(structure)
        return tuple(NestedCell._validate(child, depth - 1) for child in structure)

    @classmethod
    def parse(cls, text, k=None):
        """
        read "e(2,1,1)" for k = 2 and bracket notation like "e([[1],[1,1]])"
        for deeper cells, where k follows from the nesting depth
        """
        match = re.fullmatch(r"\s*e\((.*)\)\s*", text)
        if match is None:
            raise InvalidInputError(f'Cell name "{text}" does not have the form e(...)')
        structure = _parse_structure(match.group(1))

        depth, x = 1, structure
        while not isinstance(x[0], int):
            depth, x = depth + 1, x[0]
        if k is not None and int(k) != depth + 1:
            raise InvalidInputError(f'Cell "{text}" has depth {depth + 1}, expected {k}')
        return cls(depth + 1, structure)

    @property
    def name(self):
        return "e(" + ",".join(_render(x) for x in self.structure) + ")"

    @property
    def group_counts(self):
        """
        number of groups on levels 1, ..., k - 1 followed by the number of points
        """
        return _group_counts(self.structure, self.k - 1)

    @property
    def dimension(self):
        return self.n + sum(self.group_counts[:-1])

    def __repr__(self):
        return f"NestedCell({self.k}, {self.name})"

    def __eq__(self, other):
        if not isinstance(other, NestedCell):
            return NotImplemented
        return self.k == other.k and self.structure == other.structure

    def __hash__(self):
        return hash((self.k, self.structure))

    def tree(self):
        """
        nested lists with the point labels 1, ..., n in lexicographic order
        at the leaves
        """
        counter = iter(range(1, self.n + 1))

        def expand(structure, depth):
            if depth == 1:
                return [[next(counter) for _ in range(a)] for a in structure]
            return [expand(child, depth - 1) for child in structure]

        return expand(self.structure, self.k - 1)

    @classmethod
    def from_tree(cls, k, tree):
        def shape(x, depth):
            if depth == 1:
                return tuple(len(group) for group in x)
            return tuple(shape(child, depth - 1) for child in x)

        return cls(k, shape(tree, k - 1))


class LabeledCell:
    """
    a cell of a finite covering, the label selects one of the sheets over
    the base cell
    """

    def __init__(self, base, label):
        self.base = base
        self.label = label

    @classmethod
    def parse(cls, text, k=None):
        match = re.fullmatch(r"\s*(e\(.*\))_(\w+)\s*", text)
        if match is None:
            raise InvalidInputError(f'Covering cell name "{text}" does not have the form e(...)_label')
        label = match.group(2)
        if label.isdigit():
            label = int(label)
        return cls(NestedCell.parse(match.group(1), k), label)

    @property
    def name(self):
        return f"{self.base.name}_{self.label}"

    @property
    def dimension(self):
        return self.base.dimension

    def __repr__(self):
        return f"LabeledCell({self.name})"

    def __eq__(self, other):
        if not isinstance(other, LabeledCell):
            return NotImplemented
        return self.base == other.base and self.label == other.label

    def __hash__(self):
        return hash((self.base, self.label))


max_plane_points = 6
max_space_points = 3


def nested_cells(k, n):
    """
    all cells of the configuration space of n points in R^k, highest
    dimension first
    """
    k, n = int(k), int(n)
    if k < 2 or n < 1:
        raise InvalidInputError(f"Unsupported configuration space of {n} points in R^{k}")
    cells = [NestedCell(k, s) for s in _structures(k - 1, n)]
    return sorted(cells, key=lambda cell: -cell.dimension)


def fuks_cells(n):
    n = int(n)
    if not (2 <= n <= max_plane_points):
        raise InvalidInputError(f"Number of points must be between 2 and {max_plane_points}, got {n}")
    return nested_cells(2, n)

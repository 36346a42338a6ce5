# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

"""
homology classes of explicit cycles, and chain maps between complexes
"""

import logging
from math import gcd, inf

from sympy import Matrix

from .matrix import SparseIntMatrix
from .snf import smith_decomposition, smith_invariants, rank
from .complex import euler_characteristic
from ..errors import InvalidInputError

logger = logging.getLogger("knotcohomology.linalg")


def _lcm(a, b):
    return a * b // gcd(a, b)


def is_cycle(c, degree, chain):
    return len(c.apply_boundary(degree, chain)) == 0


def class_order(c, degree, chain):
    """
    order of the homology class of a cycle, inf for a class of infinite order
    and 1 for a boundary
    """
    if not is_cycle(c, degree, chain):
        raise InvalidInputError(f"Chain in degree {degree} is not a cycle")

    vector = c.vector(degree, chain)
    z = [vector.get(i, 0) for i in range(c.rank_at(degree))]

    incoming = c.boundary(degree + 1)
    if incoming.cols == 0 or incoming.is_zero():
        return 1 if not any(z) else inf

    D, U, _ = smith_decomposition(incoming)
    diagonal = [D[i][i] for i in range(min(len(D), len(D[0]))) if D[i][i] != 0]
    y = [sum(u * x for u, x in zip(row, z)) for row in U]

    if any(y[i] != 0 for i in range(len(diagonal), len(y))):
        return inf

    order = 1
    for d, x in zip(diagonal, y):
        order = _lcm(order, d // gcd(d, x))
    return order


def generates_homology(c, degree, chains):
    """
    whether the classes of the given cycles generate the homology in a degree,
    that is, the cycles together with the boundaries span all cycles
    """
    for chain in chains:
        if not is_cycle(c, degree, chain):
            raise InvalidInputError(f"Chain in degree {degree} is not a cycle")

    incoming = c.boundary(degree + 1)
    triples = list(incoming.triples())
    for j, chain in enumerate(chains):
        triples.extend((i, incoming.cols + j, v) for i, v in c.vector(degree, chain).items())
    spanning = SparseIntMatrix.from_triples(c.rank_at(degree), incoming.cols + len(chains), triples)

    cycles_rank = c.rank_at(degree) - rank(c.boundary(degree))
    invariants = smith_invariants(spanning)
    return len(invariants) == cycles_rank and all(t == 1 for t in invariants)


class ChainMap:
    """
    degreewise integer matrices from the source to the target complex
    """

    def __init__(self, source, target, matrices):
        self.source = source
        self.target = target
        self.matrices = dict()
        for d in source.range():
            matrix = matrices.get(d, SparseIntMatrix(target.rank_at(d), source.rank_at(d)))
            if matrix.shape != (target.rank_at(d), source.rank_at(d)):
                raise InvalidInputError(f"Chain map in degree {d} has shape {matrix.shape}")
            self.matrices[d] = matrix

    def at(self, degree):
        if degree in self.matrices:
            return self.matrices[degree]
        return SparseIntMatrix(self.target.rank_at(degree), self.source.rank_at(degree))

    def commutes(self):
        failures = []
        for d in self.source.range():
            left = self.at(d - 1) @ self.source.boundary(d)
            right = self.target.boundary(d) @ self.at(d)
            if left != right:
                failures.append(d)
        return failures


def _rational_rank(columns, nrows):
    if len(columns) == 0:
        return 0
    return Matrix(nrows, len(columns), lambda i, j: columns[j][i]).rank()


def _kernel_basis(matrix):
    if matrix.cols == 0:
        return []
    if matrix.rows == 0:
        return [[int(i == j) for i in range(matrix.cols)] for j in range(matrix.cols)]
    return [list(v) for v in Matrix(matrix.to_dense()).nullspace()]


def induced_rational_rank(chainmap, degree):
    """
    rank of the map induced on homology with rational coefficients
    """
    source, target = chainmap.source, chainmap.target
    n = target.rank_at(degree)

    images = []
    dense = chainmap.at(degree).to_dense()
    for v in _kernel_basis(source.boundary(degree)):
        images.append([sum(row[j] * v[j] for j in range(len(v))) for row in dense])

    incoming = target.boundary(degree + 1).to_dense()
    boundaries = [[row[j] for row in incoming] for j in range(target.rank_at(degree + 1))]

    return _rational_rank(images + boundaries, n) - _rational_rank(boundaries, n)


def map_on_homology_is_injective(chainmap, degree):
    """
    injectivity of the induced map on the free parts of homology
    """
    source = chainmap.source
    kernel = len(_kernel_basis(source.boundary(degree)))
    betti = kernel - rank(source.boundary(degree + 1))
    return induced_rational_rank(chainmap, degree) == betti


def coefficient_sequence_check(inclusion, projection):
    """
    check that 0 -> C' -> C -> C'' -> 0 is a short exact sequence of chain
    complexes, returns a list of violations
    """
    violations = []

    for name, chainmap in [("inclusion", inclusion), ("projection", projection)]:
        for d in chainmap.commutes():
            violations.append(f"{name} does not commute with the boundary at degree {d}")

    if inclusion.target is not projection.source:
        violations.append("inclusion target and projection source differ")
        return violations

    middle = inclusion.target
    for d in middle.range():
        i = inclusion.at(d)
        p = projection.at(d)

        if not (p @ i).is_zero():
            violations.append(f"projection after inclusion is nonzero at degree {d}")

        invariants = smith_invariants(i)
        if len(invariants) != i.cols:
            violations.append(f"inclusion is not injective at degree {d}")
        if any(t != 1 for t in invariants):
            violations.append(f"inclusion has non-saturated image at degree {d}")

        invariants = smith_invariants(p)
        if len(invariants) != p.rows or any(t != 1 for t in invariants):
            violations.append(f"projection is not surjective at degree {d}")

        if len(smith_invariants(i)) + len(invariants) != middle.rank_at(d):
            violations.append(f"sequence is not exact in the middle at degree {d}")

    chi = euler_characteristic(middle)
    if chi != euler_characteristic(inclusion.source) + euler_characteristic(projection.target):
        violations.append("Euler characteristics are not additive")

    for violation in violations:
        logger.debug(violation)

    return violations

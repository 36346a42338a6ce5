# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

"""
integer chain complexes with sparse boundary matrices
"""

import logging

from .matrix import SparseIntMatrix, block_diagonal
from .group import AbelianGroup
from .snf import smith_invariants
from ..errors import ComplexError, InvalidInputError

logger = logging.getLogger("knotcohomology.linalg")


class IntegerChainComplex:
    """
    graded free modules over the integers with boundary matrices,
    boundary(d) maps degree d to degree d - 1
    """

    def __init__(self, degrees, ranks, boundaries=None, labels=None, name=None):
        lo, hi = degrees
        if lo > hi:
            raise InvalidInputError(f"Invalid degree range [{lo}, {hi}]")
        self.degrees = (int(lo), int(hi))
        self.ranks = {d: int(ranks.get(d, 0)) for d in range(lo, hi + 1)}

        self.boundaries = dict()
        for d, matrix in (boundaries or {}).items():
            if not (lo <= d <= hi):
                raise InvalidInputError(f"Boundary in degree {d} outside of [{lo}, {hi}]")
            expected = (self.rank_at(d - 1), self.rank_at(d))
            if matrix.shape != expected:
                raise InvalidInputError(
                    f"Boundary in degree {d} has shape {matrix.shape}, expected {expected}"
                )
            if not matrix.is_zero():
                self.boundaries[d] = matrix

        self.labels = dict()
        for d, basis in (labels or {}).items():
            basis = list(basis)
            if len(basis) != self.rank_at(d):
                raise InvalidInputError(f"Expected {self.rank_at(d)} labels in degree {d}, got {len(basis)}")
            self.labels[d] = basis

        self.name = name

    def __repr__(self):
        ranks = ", ".join(f"{d}: {self.ranks[d]}" for d in self.range())
        if self.name is not None:
            return f"IntegerChainComplex({self.name}, {{{ranks}}})"
        return f"IntegerChainComplex({{{ranks}}})"

    def range(self):
        lo, hi = self.degrees
        return range(lo, hi + 1)

    def rank_at(self, degree):
        return self.ranks.get(degree, 0)

    def boundary(self, degree):
        if degree in self.boundaries:
            return self.boundaries[degree]
        return SparseIntMatrix(self.rank_at(degree - 1), self.rank_at(degree))

    def basis_labels(self, degree):
        if degree in self.labels:
            return self.labels[degree]
        return list(range(self.rank_at(degree)))

    def index(self, degree, label):
        return self.basis_labels(degree).index(label)

    def vector(self, degree, chain):
        """
        convert a chain given as a map from basis label to coefficient
        into a map from basis index to coefficient
        """
        labels = self.basis_labels(degree)
        positions = {label: i for i, label in enumerate(labels)}
        vector = dict()
        for label, coefficient in chain.items():
            if label not in positions:
                raise InvalidInputError(f'Unknown basis element "{label}" in degree {degree}')
            if coefficient != 0:
                vector[positions[label]] = vector.get(positions[label], 0) + coefficient
        return {i: v for i, v in vector.items() if v != 0}

    def chain(self, degree, vector):
        labels = self.basis_labels(degree)
        return {labels[i]: v for i, v in sorted(vector.items()) if v != 0}

    def apply_boundary(self, degree, chain):
        image = self.boundary(degree).apply(self.vector(degree, chain))
        return self.chain(degree - 1, image)

    def shifted(self, shift):
        lo, hi = self.degrees
        return IntegerChainComplex(
            (lo + shift, hi + shift),
            {d + shift: r for d, r in self.ranks.items()},
            {d + shift: m for d, m in self.boundaries.items()},
            {d + shift: basis for d, basis in self.labels.items()},
            name=self.name,
        )


def verify_complex(c):
    """
    list the degrees d where boundary(d - 1) * boundary(d) is nonzero,
    an empty list means the complex is valid
    """
    violations = []
    for d in c.range():
        if d - 1 < c.degrees[0]:
            continue
        product = c.boundary(d - 1) @ c.boundary(d)
        if not product.is_zero():
            violations.append(d)
    return violations


def check_complex(c):
    violations = verify_complex(c)
    if len(violations) > 0:
        d = violations[0]
        raise ComplexError(f"Boundary does not square to zero at degree {d}", degree=d)


def homology(c, check=True):
    """
    H_d = ker boundary(d) / im boundary(d + 1) for every degree of the complex
    """
    if check:
        check_complex(c)

    invariants = {d: smith_invariants(c.boundary(d)) for d in c.range()}
    invariants[c.degrees[1] + 1] = []

    groups = dict()
    for d in c.range():
        incoming = invariants[d + 1]
        free_rank = c.rank_at(d) - len(invariants[d]) - len(incoming)
        groups[d] = AbelianGroup(free_rank=free_rank, torsion=[t for t in incoming if t > 1])

    logger.debug(f"Homology of {c!r} is {', '.join(f'{d}: {g}' for d, g in groups.items())}")

    return groups


def euler_characteristic(c):
    return sum((-1) ** d * c.rank_at(d) for d in c.range())


def euler_check(c, groups=None):
    if groups is None:
        groups = homology(c)
    return euler_characteristic(c) == sum((-1) ** d * g.free_rank for d, g in groups.items())


def direct_sum(c1, c2):
    lo = min(c1.degrees[0], c2.degrees[0])
    hi = max(c1.degrees[1], c2.degrees[1])

    ranks = {d: c1.rank_at(d) + c2.rank_at(d) for d in range(lo, hi + 1)}

    boundaries = {d: block_diagonal(c1.boundary(d), c2.boundary(d)) for d in range(lo, hi + 1)}

    labels = dict()
    for d in range(lo, hi + 1):
        labels[d] = [(0, label) for label in c1.basis_labels(d)] + [(1, label) for label in c2.basis_labels(d)]

    return IntegerChainComplex((lo, hi), ranks, boundaries, labels)


def graded_direct_sum(*gradeds):
    result = dict()
    for graded in gradeds:
        for d, g in graded.items():
            result[d] = result.get(d, AbelianGroup()) + g
    return result


def nonzero(graded):
    return {d: g for d, g in sorted(graded.items()) if not g.is_zero}

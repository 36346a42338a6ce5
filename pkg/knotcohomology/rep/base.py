# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

"""
integer matrix representations of the symmetric group S(n), presented by the
images of the adjacent transpositions s_1, ..., s_{n-1}

matrices act on column vectors, so rep(sigma tau) = rep(sigma) rep(tau)
"""

import logging
from itertools import permutations

import numpy as np

from ..errors import RepresentationError

logger = logging.getLogger("knotcohomology.rep")


def as_matrix(rows):
    return np.array([[int(v) for v in row] for row in rows], dtype=object)


def identity(dim):
    return as_matrix([[int(i == j) for j in range(dim)] for i in range(dim)])


def kron(a, b):
    rows = []
    for i in range(a.shape[0]):
        for k in range(b.shape[0]):
            rows.append([a[i, j] * b[k, l] for j in range(a.shape[1]) for l in range(b.shape[1])])
    return as_matrix(rows)


def adjacent_word(perm):
    """
    factor a permutation, given in one-line notation perm[i - 1] = sigma(i),
    as sigma = s_{w_1} s_{w_2} ... s_{w_m}
    """
    line = list(perm)
    swaps = []
    changed = True
    while changed:
        changed = False
        for j in range(len(line) - 1):
            if line[j] > line[j + 1]:
                line[j], line[j + 1] = line[j + 1], line[j]
                swaps.append(j + 1)
                changed = True
    return list(reversed(swaps))


def compose(sigma, tau):
    """
    one-line notation of sigma after tau
    """
    return tuple(sigma[t - 1] for t in tau)


def transposition(n, x, y):
    line = list(range(1, n + 1))
    line[x - 1], line[y - 1] = y, x
    return tuple(line)


class SnRepresentation:
    def __init__(self, n, generators, name=None):
        n = int(n)
        if n < 2:
            raise RepresentationError(f"Symmetric group S({n}) needs n >= 2")

        generators = [as_matrix(g) for g in generators]
        if len(generators) != n - 1:
            raise RepresentationError(f"Expected {n - 1} generator images, got {len(generators)}")

        dims = set(g.shape for g in generators)
        if len(dims) != 1:
            raise RepresentationError(f"Generator images have differing shapes {sorted(dims)}")
        (rows, cols), = dims
        if rows != cols or rows < 1:
            raise RepresentationError(f"Generator images must be square, got {rows}x{cols}")

        self.n = n
        self.dim = rows
        self.generators = generators
        self.name = name

    def __repr__(self):
        if self.name is not None:
            return f"SnRepresentation({self.name}, n={self.n}, dim={self.dim})"
        return f"SnRepresentation(n={self.n}, dim={self.dim})"

    def __eq__(self, other):
        if not isinstance(other, SnRepresentation):
            return NotImplemented
        return (
            self.n == other.n and self.dim == other.dim
            and all(np.array_equal(a, b) for a, b in zip(self.generators, other.generators))
        )

    def generator(self, i):
        return self.generators[i - 1]

    def evaluate(self, perm):
        """
        matrix of an arbitrary permutation in one-line notation
        """
        perm = tuple(perm)
        if sorted(perm) != list(range(1, self.n + 1)):
            raise RepresentationError(f"{perm} is not a permutation of 1..{self.n}")

        result = identity(self.dim)
        for i in adjacent_word(perm):
            result = result.dot(self.generator(i))
        return result

    def trace(self, perm):
        return int(np.trace(self.evaluate(perm)))

    def group_elements(self):
        return list(permutations(range(1, self.n + 1)))


def validate(r):
    """
    list the violated Coxeter relations, an empty list means r is a representation
    """
    violations = []
    one = identity(r.dim)

    for i in range(1, r.n):
        s = r.generator(i)
        if not np.array_equal(s.dot(s), one):
            violations.append(f"s_{i} is not an involution")

    for i in range(1, r.n - 1):
        a, b = r.generator(i), r.generator(i + 1)
        if not np.array_equal(a.dot(b).dot(a), b.dot(a).dot(b)):
            violations.append(f"braid relation fails for s_{i}, s_{i + 1}")

    for i in range(1, r.n):
        for j in range(i + 2, r.n):
            a, b = r.generator(i), r.generator(j)
            if not np.array_equal(a.dot(b), b.dot(a)):
                violations.append(f"s_{i} and s_{j} do not commute")

    return violations

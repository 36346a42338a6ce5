# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

"""
Smith normal form over the integers

smith_invariants works on the sparse representation and only tracks the
diagonal. smith_decomposition is dense and also returns the unimodular
transforms, it is meant for the small matrices used in class-order
computations and tests
"""

import logging
from collections import defaultdict
from itertools import combinations
from math import gcd

from sympy import Matrix

from .matrix import SparseIntMatrix
from .group import _invariant_factors

logger = logging.getLogger("knotcohomology.linalg")


def _diagonal_to_invariants(diagonal):
    nonunits = _invariant_factors([d for d in diagonal if d > 1])
    return [1] * (len(diagonal) - len(nonunits)) + list(nonunits)


class _Eliminator:
    def __init__(self, matrix):
        self.rows = defaultdict(dict)
        self.cols = defaultdict(set)
        for (r, c), v in matrix.entries.items():
            self.rows[r][c] = v
            self.cols[c].add(r)

    def choose_pivot(self):
        best = None
        bestkey = None
        for r, row in self.rows.items():
            for c, v in row.items():
                key = (abs(v), (len(row) - 1) * (len(self.cols[c]) - 1), r, c)
                if bestkey is None or key < bestkey:
                    best, bestkey = (r, c), key
            if bestkey is not None and bestkey[0] == 1 and bestkey[1] == 0:
                break
        return best

    def subtract_row(self, target, source, factor):
        targetrow = self.rows[target]
        for c, v in self.rows[source].items():
            value = targetrow.get(c, 0) - factor * v
            if value == 0:
                targetrow.pop(c, None)
                self.cols[c].discard(target)
            else:
                targetrow[c] = value
                self.cols[c].add(target)
        if len(targetrow) == 0:
            del self.rows[target]

    def remove(self, r, c):
        for cc in self.rows[r]:
            self.cols[cc].discard(r)
        del self.rows[r]
        for rr in list(self.cols[c]):
            self.rows[rr].pop(c, None)
            if len(self.rows[rr]) == 0:
                del self.rows[rr]
        del self.cols[c]

    def reduce_pivot(self, r, c):
        """
        clear row and column of the pivot, moving the pivot to a
        smaller remainder whenever a division leaves one
        """
        while True:
            pivot = self.rows[r][c]

            moved = False
            for r2 in sorted(self.cols[c] - {r}):
                q = self.rows[r2][c] // pivot
                self.subtract_row(r2, r, q)
                if c in self.rows.get(r2, {}):
                    r, moved = r2, True
                    break
            if moved:
                continue

            # column c now holds the pivot only, so column operations touch row r alone
            row = self.rows[r]
            for c2 in sorted(set(row) - {c}):
                value = row[c2] - (row[c2] // pivot) * pivot
                if value == 0:
                    del row[c2]
                    self.cols[c2].discard(r)
                else:
                    row[c2] = value
                    c, moved = c2, True
                    break
            if moved:
                continue

            return abs(pivot), r, c

    def run(self):
        diagonal = []
        while len(self.rows) > 0:
            r, c = self.choose_pivot()
            d, r, c = self.reduce_pivot(r, c)
            diagonal.append(d)
            self.remove(r, c)
        return diagonal


def smith_diagonal(m):
    """
    a diagonal equivalent to m, not necessarily in divisibility order
    """
    if not isinstance(m, SparseIntMatrix):
        m = SparseIntMatrix.from_dense(m)
    if m.is_zero():
        return []

    logger.debug(f"Eliminating {m.rows}x{m.cols} matrix with {m.nnz} entries")

    return _Eliminator(m).run()


def smith_invariants(m):
    """
    invariant factors d_1 | d_2 | ... | d_r of an integer matrix, r = rank
    """
    return _diagonal_to_invariants(smith_diagonal(m))


def rank(m):
    return len(smith_diagonal(m))


def smith_decomposition(m):
    """
    dense Smith decomposition, returns (D, U, V) with U m V = D
    """
    if isinstance(m, SparseIntMatrix):
        m = m.to_dense()
    A = [[int(v) for v in row] for row in m]
    nrows = len(A)
    ncols = len(A[0]) if nrows > 0 else 0

    U = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    V = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def swaprows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swapcols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def addrow(target, source, factor):
        A[target] = [a - factor * b for a, b in zip(A[target], A[source])]
        U[target] = [a - factor * b for a, b in zip(U[target], U[source])]

    def addcol(target, source, factor):
        for row in A:
            row[target] -= factor * row[source]
        for row in V:
            row[target] -= factor * row[source]

    for t in range(min(nrows, ncols)):
        candidates = [(abs(A[i][j]), i, j) for i in range(t, nrows) for j in range(t, ncols) if A[i][j] != 0]
        if len(candidates) == 0:
            break
        _, i, j = min(candidates)
        swaprows(t, i)
        swapcols(t, j)

        while True:
            for i in range(t + 1, nrows):
                addrow(i, t, A[i][t] // A[t][t])
            for j in range(t + 1, ncols):
                addcol(j, t, A[t][j] // A[t][t])

            leftover = [(abs(A[i][t]), i, t) for i in range(t + 1, nrows) if A[i][t] != 0]
            leftover += [(abs(A[t][j]), t, j) for j in range(t + 1, ncols) if A[t][j] != 0]
            if len(leftover) > 0:
                _, i, j = min(leftover)
                swaprows(t, i)
                swapcols(t, j)
                continue

            pivot = A[t][t]
            offending = next(
                (i for i in range(t + 1, nrows) for j in range(t + 1, ncols) if A[i][j] % pivot != 0),
                None
            )
            if offending is not None:
                addrow(t, offending, -1)
                continue

            break

        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]

    return A, U, V


def determinantal_invariants(m):
    """
    invariant factors from the gcds of the k x k minors, d_k = D_k / D_(k - 1),
    an independent oracle for smith_invariants on small matrices
    """
    if isinstance(m, SparseIntMatrix):
        m = m.to_dense()
    dense = Matrix(m)

    invariants = []
    previous = 1
    for k in range(1, min(dense.shape) + 1):
        determinantal = 0
        for rowset in combinations(range(dense.rows), k):
            for colset in combinations(range(dense.cols), k):
                determinantal = gcd(determinantal, int(dense.extract(list(rowset), list(colset)).det(method="bareiss")))
        if determinantal == 0:
            break
        invariants.append(determinantal // previous)
        previous = determinantal
    return invariants

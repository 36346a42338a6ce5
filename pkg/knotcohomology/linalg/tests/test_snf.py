# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import pytest

from random import Random

from sympy import Matrix

from knotcohomology.linalg import SparseIntMatrix, smith_invariants, smith_decomposition, determinantal_invariants


@pytest.mark.timeout(60)
@pytest.mark.parametrize(
    "dense, expected",
    [
        ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], [1, 1, 1]),
        ([[2, 4], [6, 8]], [2, 4]),
        ([[0] * 5, [0] * 5], []),
        ([[12, 6, 4], [3, 9, 6], [2, 16, 14]], [1, 10, 30]),
        ([[2, 0], [0, 3]], [1, 6]),
        ([[4, 0, 0], [0, 6, 0], [0, 0, 0]], [2, 12]),
    ]
)
def test_smith_invariants_examples(dense, expected):
    assert smith_invariants(SparseIntMatrix.from_dense(dense)) == expected


@pytest.mark.timeout(60)
def test_smith_invariants_empty():
    assert smith_invariants(SparseIntMatrix(0, 0)) == []
    assert smith_invariants(SparseIntMatrix(0, 4)) == []


@pytest.mark.timeout(300)
def test_smith_invariants_gcd_of_minors():
    rng = Random(20201017)
    for _ in range(200):
        nrows, ncols = rng.randint(1, 6), rng.randint(1, 6)
        dense = [[rng.randint(-9, 9) for _ in range(ncols)] for _ in range(nrows)]

        assert smith_invariants(SparseIntMatrix.from_dense(dense)) == determinantal_invariants(dense)


@pytest.mark.timeout(60)
def test_smith_invariants_permutation_and_transpose():
    rng = Random(7)
    for _ in range(50):
        nrows, ncols = rng.randint(1, 6), rng.randint(1, 6)
        dense = [[rng.choice([0, 0, 1, -2, 3, 6]) for _ in range(ncols)] for _ in range(nrows)]
        matrix = SparseIntMatrix.from_dense(dense)

        rowperm = list(range(nrows))
        colperm = list(range(ncols))
        rng.shuffle(rowperm)
        rng.shuffle(colperm)

        expected = smith_invariants(matrix)
        assert smith_invariants(matrix.permuted(rowperm, colperm)) == expected
        assert smith_invariants(matrix.transpose()) == expected


@pytest.mark.timeout(60)
def test_smith_decomposition():
    rng = Random(3)
    for _ in range(40):
        nrows, ncols = rng.randint(1, 5), rng.randint(1, 5)
        dense = [[rng.randint(-5, 5) for _ in range(ncols)] for _ in range(nrows)]

        D, U, V = smith_decomposition(dense)

        UM = [[sum(U[i][k] * dense[k][j] for k in range(nrows)) for j in range(ncols)] for i in range(nrows)]
        UMV = [[sum(UM[i][k] * V[k][j] for k in range(ncols)) for j in range(ncols)] for i in range(nrows)]
        assert UMV == D

        assert abs(Matrix(U).det()) == 1
        assert abs(Matrix(V).det()) == 1

        diagonal = [D[i][i] for i in range(min(nrows, ncols)) if D[i][i] != 0]
        assert all(D[i][j] == 0 for i in range(nrows) for j in range(ncols) if i != j)
        assert diagonal == smith_invariants(SparseIntMatrix.from_dense(dense))

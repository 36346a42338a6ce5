# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

"""
sparse matrices over the integers, stored as a map from (row, col) to value
"""

from collections import defaultdict

from ..errors import InvalidInputError


class SparseIntMatrix:
    def __init__(self, rows, cols, entries=None):
        if rows < 0 or cols < 0:
            raise InvalidInputError(f"Invalid shape ({rows}, {cols})")

        self.rows = int(rows)
        self.cols = int(cols)

        self.entries = dict()
        if entries is not None:
            for (r, c), v in entries.items():
                self[r, c] = v

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols)

    @classmethod
    def identity(cls, n):
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def from_dense(cls, array):
        array = [list(row) for row in array]
        rows = len(array)
        cols = len(array[0]) if rows > 0 else 0
        matrix = cls(rows, cols)
        for r, row in enumerate(array):
            if len(row) != cols:
                raise InvalidInputError("Ragged rows in dense matrix")
            for c, v in enumerate(row):
                matrix[r, c] = v
        return matrix

    @classmethod
    def from_triples(cls, rows, cols, triples):
        matrix = cls(rows, cols)
        for r, c, v in triples:
            matrix.add(r, c, v)
        return matrix

    @property
    def shape(self):
        return self.rows, self.cols

    @property
    def nnz(self):
        return len(self.entries)

    def _check_index(self, r, c):
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise InvalidInputError(f"Index ({r}, {c}) out of bounds for shape {self.shape}")

    def __getitem__(self, idx):
        r, c = idx
        self._check_index(r, c)
        return self.entries.get((r, c), 0)

    def __setitem__(self, idx, value):
        r, c = idx
        self._check_index(r, c)
        value = int(value)
        if value == 0:
            self.entries.pop((r, c), None)
        else:
            self.entries[r, c] = value

    def add(self, r, c, value):
        self[r, c] = self[r, c] + int(value)

    def __eq__(self, other):
        if not isinstance(other, SparseIntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __repr__(self):
        return f"SparseIntMatrix({self.rows}, {self.cols}, nnz={self.nnz})"

    def copy(self):
        return SparseIntMatrix(self.rows, self.cols, self.entries)

    def triples(self):
        return [(r, c, v) for (r, c), v in sorted(self.entries.items())]

    def to_dense(self):
        dense = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            dense[r][c] = v
        return dense

    def transpose(self):
        return SparseIntMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()})

    def is_zero(self):
        return len(self.entries) == 0

    def row_dicts(self):
        rowdicts = defaultdict(dict)
        for (r, c), v in self.entries.items():
            rowdicts[r][c] = v
        return rowdicts

    def permuted(self, rowperm=None, colperm=None):
        """
        entry (r, c) moves to (rowperm[r], colperm[c])
        """
        if rowperm is None:
            rowperm = range(self.rows)
        if colperm is None:
            colperm = range(self.cols)
        return SparseIntMatrix(
            self.rows, self.cols, {(rowperm[r], colperm[c]): v for (r, c), v in self.entries.items()}
        )

    def __matmul__(self, other):
        if not isinstance(other, SparseIntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise InvalidInputError(f"Cannot multiply shapes {self.shape} and {other.shape}")

        otherrows = other.row_dicts()
        product = defaultdict(int)
        for (r, k), a in self.entries.items():
            for c, b in otherrows.get(k, {}).items():
                product[r, c] += a * b

        return SparseIntMatrix(self.rows, other.cols, product)

    def apply(self, vector):
        """
        multiply with a vector given as a map from index to value
        """
        result = defaultdict(int)
        for (r, c), v in self.entries.items():
            x = vector.get(c, 0)
            if x != 0:
                result[r] += v * x
        return {r: v for r, v in result.items() if v != 0}


def block_diagonal(*matrices):
    rows = sum(m.rows for m in matrices)
    cols = sum(m.cols for m in matrices)
    result = SparseIntMatrix(rows, cols)
    r0, c0 = 0, 0
    for m in matrices:
        for (r, c), v in m.entries.items():
            result[r0 + r, c0 + c] = v
        r0 += m.rows
        c0 += m.cols
    return result

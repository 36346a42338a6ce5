# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

"""
the coefficient sequence 0 -> Z -> A2hat -> A2 -> 0
"""

from itertools import combinations

import numpy as np

from .base import as_matrix, transposition
from .builtin import (
    trivial,
    matching_rep,
    matching_rep_hat,
    matching_quotient,
    matchings,
    permute_matching,
    canonical_matching,
)

diagonal_inclusion = as_matrix([[1], [1], [1]])


def exact_triple_check():
    violations = []

    hat, quotient, unit = matching_rep_hat(), matching_rep(), trivial(4)

    if not (matching_quotient.dot(diagonal_inclusion) == 0).all():
        violations.append("the diagonal does not lie in the kernel of the quotient map")

    for i in range(1, 4):
        g = hat.generator(i)

        if not np.array_equal(g.dot(diagonal_inclusion), diagonal_inclusion.dot(unit.generator(i))):
            violations.append(f"diagonal vector is not fixed by s_{i}")

        if not np.array_equal(matching_quotient.dot(g), quotient.generator(i).dot(matching_quotient)):
            violations.append(f"quotient map does not intertwine s_{i}")

    for x, y in combinations(range(1, 5), 2):
        t = transposition(4, x, y)
        if hat.trace(t) != unit.trace(t) + quotient.trace(t):
            violations.append(f"characters are not additive on ({x} {y})")

    return violations


def restriction_check():
    """
    every element of S(4) acts through the permutation it induces on the
    three matchings, so the image is the permutation representation of S(3)
    """
    violations = []

    hat = matching_rep_hat()
    for perm in hat.group_elements():
        expected = as_matrix([
            [int(permute_matching(perm, source) == canonical_matching(target)) for source in matchings]
            for target in matchings
        ])
        if not np.array_equal(hat.evaluate(perm), expected):
            violations.append(f"{perm} does not act by the induced permutation of matchings")

    return violations

# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

"""
closed form bounds on the degree of the polynomial maps and the dimension
of the generic subspaces that are needed for the stable range
"""

from sympy import Rational, primefactors

from ..errors import InvalidInputError


def stable_degree_bound(D, k):
    """
    the largest cohomological degree s that a generic D-dimensional subspace
    controls, ([D/(k+2)] + 1)(2k - 5) - 2
    """
    return (D // (k + 2) + 1) * (2 * k - 5) - 2


def D_of_s(k, s):
    """
    the smallest dimension D with s <= min(D - 1, stable_degree_bound(D, k))
    """
    if k < 3:
        raise InvalidInputError(f"Expected k >= 3, got {k}")
    if s < 1:
        raise InvalidInputError(f"Expected s >= 1, got {s}")

    D = s + 1
    while s > min(D - 1, stable_degree_bound(D, k)):
        D += 1
    return D


def divideontimes_dim(d, k):
    """
    a + k d / a - 1 where a is the least divisor of d greater than one
    """
    if d < 2:
        raise InvalidInputError(f"Expected d >= 2, got {d}")
    a = primefactors(d)[0]
    return a + k * d // a - 1


def elementary_bound(d):
    """
    number of distinct elementary conditions a polynomial of degree d can
    satisfy without being forced into the discriminant is less than this
    """
    if d < 2:
        raise InvalidInputError(f"Expected d >= 2, got {d}")
    return Rational((d - 1) ** 2, 2)

# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

"""
coordinates of the main cohomological spectral sequence

column p = -rho of page one is the Borel-Moore homology of Lambda_rho minus
Lambda_(rho - 1), reindexed by Alexander duality and the Thom isomorphism
of the bundle of subspaces of codimension rho k. Degree m there lands in

    q = rho (2k + 1) - 1 - m

which does not depend on the dimension D of the approximating subspaces
"""

from .entry import Entry, SSTable, finite_unknown, any_unknown
from ..linalg import AbelianGroup
from ..errors import InvalidInputError


def q_of(rho, m, k):
    return rho * (2 * k + 1) - 1 - m


def degree_of(rho, q, k):
    """
    inverse of q_of for fixed rho and k
    """
    return rho * (2 * k + 1) - 1 - q


def _linear(coefficient, const):
    if const == 0:
        return f"{coefficient}k"
    sign = "+" if const > 0 else "-"
    return f"{coefficient}k{sign}{abs(const)}"


def q_symbolic(rho, m):
    """
    q_of as a polynomial in k, "6k-11" for rho = 3 and m = 13
    """
    return _linear(2 * rho, rho - 1 - m)


def degree_symbolic(rho, m):
    """
    the total degree p + q as a polynomial in k
    """
    return _linear(2 * rho, -1 - m)


def wedge_ok(p, q, k):
    return p < 0 and q >= -2 * p * (k - 2)


def stable_range(rho, D, k):
    """
    rho < (D + 1) / (k + 2)
    """
    return rho * (k + 2) < D + 1


def stable_dimension(rho, k):
    """
    the least dimension D of the finite-dimensional approximation in which
    the columns p = -1, ..., -rho are in the stable range
    """
    if rho < 1:
        raise InvalidInputError(f"Expected rho >= 1, got {rho}")

    D = 0
    while not stable_range(rho, D, k):
        D += 1
    return D


def pro99_bound(rho, j):
    """
    Theta_j minus Theta_(j - 1) has no Borel-Moore homology above this degree
    """
    return 5 * rho - j - 1


def column_bounds(p, k):
    """
    (trivial through q, Z_2 at q, finite through q) for column p
    """
    if p >= 0:
        raise InvalidInputError(f"Expected a negative column, got p={p}")
    rho = -p
    trivial = rho * (2 * k - 4)
    return trivial, trivial + 1, trivial + 2


def first_total(rho, k):
    """
    the smallest total degree p + q that column -rho can reach
    """
    return column_bounds(-rho, k)[1] - rho


def main_column(rho, k, groups, annotation=None):
    """
    the column p = -rho from the graded Borel-Moore homology of
    Lambda_rho minus Lambda_(rho - 1)
    """
    if rho < 1:
        raise InvalidInputError(f"Expected rho >= 1, got {rho}")

    column = SSTable(("p", "q"), name=f"column p={-rho}", rho=rho)
    for m, value in groups.items():
        entry = Entry.coerce(value)
        if annotation is not None:
            entry = entry.with_annotation(annotation)
        column[-rho, q_of(rho, m, k)] = entry
    return column


def unknown_column(rho, k, window):
    """
    a column about which nothing is known, "?" throughout the wedge
    """
    column = SSTable(("p", "q"), name=f"column p={-rho}", rho=rho)
    q = 2 * rho * (k - 2)
    while q - rho <= window:
        column[-rho, q] = Entry(unknown=any_unknown)
        q += 1
    return column


def bounds_column(rho, k, window, infinite=None):
    """
    the column p = -rho as far as the general bounds determine it, "?" above
    the finite range up to total degree window

    infinite maps q to entries that are known to be infinite
    """
    if infinite is None:
        infinite = dict()

    _, z2_at, finite_through = column_bounds(-rho, k)

    column = SSTable(("p", "q"), name=f"column p={-rho}", rho=rho)
    column[-rho, z2_at] = Entry(AbelianGroup.cyclic(2), annotation="configured")
    column[-rho, finite_through] = Entry(unknown=finite_unknown)

    q = finite_through + 1
    while q - rho <= window:
        column[-rho, q] = Entry(unknown=any_unknown)
        q += 1

    for q, entry in infinite.items():
        column[-rho, q] = entry

    for p, q in list(column):
        if p + q > window:
            column[p, q] = Entry()

    return column


def check_wedge(page, k):
    """
    coordinates of nonzero entries outside of the wedge p < 0, q >= -2p(k - 2)
    """
    return [(p, q) for (p, q), entry in page.items() if not wedge_ok(p, q, k)]


def symbolic_column(page, rho, k):
    """
    the column p = -rho with q written as a polynomial in k
    """
    result = []
    for q, entry in sorted(page.column(-rho).items()):
        result.append((q_symbolic(rho, degree_of(rho, q, k)), entry))
    return result

# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

"""
Borel-Moore homology of an open complement U = X \\ C from the long exact
sequence of the pair

    ... -> H_i(C) -> H_i(X) -> H_i(U) -> H_{i-1}(C) -> H_{i-1}(X) -> ...

which splits into short exact sequences

    0 -> coker f_i -> H_i(U) -> ker f_{i-1} -> 0
"""

import logging

from .group import AbelianGroup, hom_is_zero, ext_is_zero
from ..errors import InconsistentSequenceError, InvalidInputError

logger = logging.getLogger("knotcohomology.linalg")

map_kinds = ["zero", "iso"]


class Ambiguity:
    def __init__(self, degree, kind, message):
        self.degree = degree
        self.kind = kind
        self.message = message

    def __repr__(self):
        return f"Ambiguity({self.degree}, {self.kind!r})"

    def to_dict(self):
        return {"degree": self.degree, "kind": self.kind, "message": self.message}


class PairSequenceSolution:
    def __init__(self, groups, ambiguities):
        self.groups = groups
        self.ambiguities = ambiguities

    @property
    def resolved(self):
        return len(self.ambiguities) == 0

    @property
    def ambiguous_degrees(self):
        return sorted(set(a.degree for a in self.ambiguities))

    def nonzero(self):
        return {d: g for d, g in sorted(self.groups.items()) if not g.is_zero}


def pair_sequence_solve(h_closed, h_total, maps=None, h_open=None):
    """
    solve the pair sequence for the homology of the complement

    maps optionally declares the restriction maps f_i: H_i(C) -> H_i(X)
    as "zero" or "iso" by degree; undeclared maps must be forced to zero
    by Hom(H_i(C), H_i(X)) = 0, otherwise the degree is reported ambiguous

    h_open is the homology of the complement where it is known independently,
    every degree that the maps determine is checked against it
    """
    if maps is None:
        maps = dict()

    degrees = set(h_closed) | set(h_total)
    if len(degrees) == 0:
        return PairSequenceSolution(dict(), [])

    lo, hi = min(degrees), max(degrees) + 1

    kernels = dict()
    cokernels = dict()
    ambiguities = []

    for i in range(lo - 1, hi + 1):
        closed = h_closed.get(i, AbelianGroup())
        total = h_total.get(i, AbelianGroup())

        declared = maps.get(i)
        if declared is not None and declared not in map_kinds:
            raise InvalidInputError(f'Unknown map kind "{declared}" at degree {i}')

        if declared == "iso":
            if closed != total:
                raise InconsistentSequenceError(
                    f"Restriction map at degree {i} is declared an isomorphism "
                    f"but {closed} and {total} are not isomorphic",
                    degree=i,
                )
            kernels[i], cokernels[i] = AbelianGroup(), AbelianGroup()

        elif declared == "zero" or hom_is_zero(closed, total):
            kernels[i], cokernels[i] = closed, total

        else:
            kernels[i], cokernels[i] = None, None
            ambiguities.append(Ambiguity(
                i, "map",
                f"Restriction map {closed} -> {total} at degree {i} is neither forced nor declared"
            ))

    groups = dict()
    for i in range(lo, hi + 1):
        sub = cokernels[i]
        quotient = kernels[i - 1]

        if sub is None or quotient is None:
            continue

        if ext_is_zero(quotient, sub):
            groups[i] = sub + quotient
        else:
            ambiguities.append(Ambiguity(
                i, "extension",
                f"Extension of {quotient} by {sub} at degree {i} is not forced to split"
            ))

    if h_open is not None:
        _check_open(h_open, groups, kernels, cokernels, maps, lo, hi)

    for ambiguity in ambiguities:
        logger.debug(ambiguity.message)

    ambiguities.sort(key=lambda a: (a.degree, a.kind))

    return PairSequenceSolution(groups, ambiguities)


def _declared(maps, *degrees):
    found = [f'{maps[i]} at degree {i}' for i in degrees if i in maps]
    if len(found) == 0:
        return "the forced maps"
    return "the declared maps (" + ", ".join(found) + ")"


def _check_open(h_open, groups, kernels, cokernels, maps, lo, hi):
    """
    exactness in degree i: H_i(U) is an extension of ker f_(i - 1) by
    coker f_i, so the group is fixed where the extension splits and the free
    rank is fixed in any case
    """
    for i in range(lo, hi + 1):
        expected = h_open.get(i, AbelianGroup())

        if i in groups:
            if groups[i] != expected:
                raise InconsistentSequenceError(
                    f"With {_declared(maps, i, i - 1)} the complement has {groups[i]} in degree {i}, "
                    f"the given value is {expected}",
                    degree=i,
                )
            continue

        sub, quotient = cokernels[i], kernels[i - 1]
        if sub is None or quotient is None:
            continue

        rank = sub.free_rank + quotient.free_rank
        if rank != expected.free_rank:
            raise InconsistentSequenceError(
                f"With {_declared(maps, i, i - 1)} the complement has rank {rank} in degree {i}, "
                f"the given value {expected} has rank {expected.free_rank}",
                degree=i,
            )

    for i in h_open:
        if (i < lo or i > hi) and not h_open[i].is_zero:
            raise InconsistentSequenceError(
                f"The complement can have no homology in degree {i}, the given value is {h_open[i]}",
                degree=i,
            )

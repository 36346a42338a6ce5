# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

"""
finitely generated abelian groups in invariant factor form

a group is stored as its free rank plus the torsion coefficients
d_1 | d_2 | ... | d_r, each at least two, so that structural equality
is isomorphism. Z_2 + Z_3 is therefore the same value as Z_6
"""

import re
from math import gcd
from functools import reduce
from collections import defaultdict

from sympy import factorint

from ..errors import InvalidInputError


def _invariant_factors(coefficients):
    powers = defaultdict(list)
    for c in coefficients:
        for p, e in factorint(c).items():
            powers[p].append(e)

    length = max((len(exponents) for exponents in powers.values()), default=0)

    factors = [1] * length
    for p, exponents in powers.items():
        exponents = sorted(exponents, reverse=True)
        for i, e in enumerate(exponents):
            factors[length - 1 - i] *= p ** e

    return tuple(factors)


class AbelianGroup:
    def __init__(self, free_rank=0, torsion=()):
        free_rank = int(free_rank)
        if free_rank < 0:
            raise InvalidInputError(f"Negative free rank {free_rank}")

        coefficients = []
        for t in torsion:
            t = abs(int(t))
            if t == 0:
                free_rank += 1
            elif t > 1:
                coefficients.append(t)

        self.free_rank = free_rank
        self.torsion = _invariant_factors(coefficients)

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def free(cls, rank=1):
        return cls(free_rank=rank)

    @classmethod
    def cyclic(cls, order):
        """
        Z for order 0, Z_order otherwise
        """
        return cls(torsion=(order,))

    @classmethod
    def from_diagonal(cls, generators, diagonal):
        """
        cokernel of a map whose Smith form has the given nonzero diagonal,
        presented on the given number of generators
        """
        diagonal = [abs(d) for d in diagonal if d != 0]
        if len(diagonal) > generators:
            raise InvalidInputError("More relations than generators in diagonal presentation")
        return cls(free_rank=generators - len(diagonal), torsion=diagonal)

    tokenregex = re.compile(r"^\(?Z(?:_(\d+))?\)?(?:\^(\d+))?$")

    @classmethod
    def parse(cls, text):
        """
        read the notation produced by str(), e.g. "Z⊕Z_2", "(Z_2)^2", "0"
        """
        text = text.replace(" ", "").replace("+", "⊕")
        if text in ("", "0"):
            return cls()

        free_rank = 0
        torsion = []
        for token in text.split("⊕"):
            match = cls.tokenregex.match(token)
            if match is None:
                raise InvalidInputError(f'Cannot parse group "{text}"')
            order, power = match.groups()
            power = int(power) if power is not None else 1
            if order is None:
                free_rank += power
            else:
                torsion.extend([int(order)] * power)

        return cls(free_rank, torsion)

    @property
    def is_zero(self):
        return self.free_rank == 0 and len(self.torsion) == 0

    @property
    def is_finite(self):
        return self.free_rank == 0

    @property
    def torsion_order(self):
        return reduce(lambda a, b: a * b, self.torsion, 1)

    @property
    def order(self):
        if not self.is_finite:
            return None
        return self.torsion_order

    @property
    def exponent(self):
        if len(self.torsion) == 0:
            return 1
        return self.torsion[-1]

    @property
    def torsion_subgroup(self):
        return AbelianGroup(torsion=self.torsion)

    @property
    def free_part(self):
        return AbelianGroup(free_rank=self.free_rank)

    def elementary_divisors(self):
        divisors = []
        for t in self.torsion:
            divisors.extend(p ** e for p, e in sorted(factorint(t).items()))
        return sorted(divisors)

    def direct_sum(self, other):
        return AbelianGroup(self.free_rank + other.free_rank, self.torsion + other.torsion)

    __add__ = direct_sum

    def __mul__(self, n):
        return AbelianGroup(self.free_rank * n, self.torsion * n)

    def __eq__(self, other):
        if not isinstance(other, AbelianGroup):
            return NotImplemented
        return self.free_rank == other.free_rank and self.torsion == other.torsion

    def __hash__(self):
        return hash((self.free_rank, self.torsion))

    def __bool__(self):
        return not self.is_zero

    def __repr__(self):
        return f"AbelianGroup({self.free_rank}, {list(self.torsion)})"

    def __str__(self):
        if self.is_zero:
            return "0"

        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")

        counts = defaultdict(int)
        for t in self.torsion:
            counts[t] += 1
        for t in sorted(counts):
            if counts[t] == 1:
                parts.append(f"Z_{t}")
            else:
                parts.append(f"(Z_{t})^{counts[t]}")

        return "⊕".join(parts)

    def to_dict(self):
        return {"rank": self.free_rank, "torsion": list(self.torsion)}


def direct_sum(*groups):
    return reduce(lambda a, b: a + b, groups, AbelianGroup())


def hom_is_zero(source, target):
    """
    Hom(source, target) vanishes iff every homomorphism is forced to be zero
    """
    if source.is_zero or target.is_zero:
        return True
    if source.free_rank > 0:
        return False
    return all(gcd(a, b) == 1 for a in source.torsion for b in target.torsion)


def ext_is_zero(quotient, sub):
    """
    Ext(quotient, sub) vanishes iff every extension of quotient by sub splits
    """
    if quotient.is_zero or sub.is_zero:
        return True
    if len(quotient.torsion) == 0:
        return True
    if sub.free_rank > 0:
        return False
    return gcd(quotient.torsion_order, sub.torsion_order) == 1


def rational_rank(group):
    return group.free_rank

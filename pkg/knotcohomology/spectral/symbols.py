# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

"""
symbols A = (a_1, ..., a_s) of systems of elementary conditions, each a_i
counting the points glued into one group, with b additional points where
the derivative vanishes
"""

from math import factorial, prod

from sympy.utilities.iterables import partitions

from ..errors import InvalidInputError

max_symbol_rank = 6


class SymbolA:
    def __init__(self, parts, b=0):
        parts = tuple(sorted((int(a) for a in parts), reverse=True))
        if any(a < 2 for a in parts):
            raise InvalidInputError(f"Symbol parts must be at least 2, got {parts}")
        if b < 0:
            raise InvalidInputError(f"Expected b >= 0, got {b}")
        self.parts = parts
        self.b = int(b)

    @classmethod
    def parse(cls, text):
        text = text.strip().strip("()")
        parts = [int(token) for token in text.split(",") if len(token.strip()) > 0]
        return cls(parts)

    @property
    def size(self):
        """|A|"""
        return sum(self.parts)

    @property
    def count(self):
        """#(A)"""
        return len(self.parts)

    @property
    def rank(self):
        return self.size - self.count

    def __eq__(self, other):
        if not isinstance(other, SymbolA):
            return NotImplemented
        return self.parts == other.parts and self.b == other.b

    def __hash__(self):
        return hash((self.parts, self.b))

    def __lt__(self, other):
        return (self.parts, self.b) < (other.parts, other.b)

    def __repr__(self):
        if self.b > 0:
            return f"SymbolA({self.parts}, b={self.b})"
        return f"SymbolA({self.parts})"

    def __str__(self):
        return f"({','.join(map(str, self.parts))})"


def complexity(symbol):
    return sum(a - 1 for a in symbol.parts) + symbol.b


def defect(symbol):
    return complexity(symbol) - symbol.count


def symbols_for(rho):
    """
    all symbols with |A| - #(A) = rho, grouped by defect
    """
    if not (1 <= rho <= max_symbol_rank):
        raise InvalidInputError(f"Symbols are enumerated for 1 <= rho <= {max_symbol_rank}, got {rho}")

    result = dict()
    for partition in partitions(rho):
        parts = []
        for part, multiplicity in partition.items():
            parts.extend([part + 1] * multiplicity)
        symbol = SymbolA(parts)
        result.setdefault(defect(symbol), set()).add(symbol)

    return dict(sorted(result.items()))


def block_fiber(symbol):
    """
    the fiber of an A-block has Borel-Moore homology only in one dimension,
    free of the returned rank
    """
    if isinstance(symbol, (tuple, list)):
        symbol = SymbolA(symbol)
    dimension = 2 * symbol.size - 3 * symbol.count - 1
    rank = prod(factorial(a - 2) for a in symbol.parts)
    return dimension, rank


def block_top_degree(symbol):
    """
    the block is a bundle over a 2|A|-dimensional base, so nothing survives
    above 4|A| - 3#(A) - 1
    """
    dimension, _ = block_fiber(symbol)
    return 2 * symbol.size + dimension


def finiteness_list(rho=4, max_defect=2):
    """
    the blocks of the given rank with defect at most max_defect, in the
    order of increasing defect
    """
    result = []
    for j, symbols in symbols_for(rho).items():
        if j > max_defect:
            continue
        for symbol in sorted(symbols, key=lambda s: tuple(-a for a in s.parts)):
            dimension, rank = block_fiber(symbol)
            result.append(dict(
                symbol=symbol,
                defect=j,
                fiber_dimension=dimension,
                fiber_rank=rank,
                top_degree=block_top_degree(symbol),
            ))
    return result

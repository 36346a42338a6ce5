# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

"""
the published boundary of the matching covering of B(C, 4), in the compact
notation e(211)_3 for the cell e(2,1,1) on the sheet where point 1 is
matched with point 3
"""

import logging
import re

from .homology import covering_complex
from .nested import LabeledCell
from ..errors import InvalidInputError

logger = logging.getLogger("knotcohomology.cells")

published_formulas = [
    ("e(1111)_2", "-e(121)_2 + e(121)_3"),
    ("e(1111)_3", "e(211)_3 - e(211)_4 - e(121)_3 + e(121)_2 + e(112)_3 - e(112)_4"),
    ("e(1111)_4", "e(211)_4 - e(211)_3 + e(112)_4 - e(112)_3"),
    ("e(211)_2", "e(31)_2 - e(31)_3 + e(31)_4"),
    ("e(211)_3", "e(31)_3 - e(22)_3 + e(22)_4"),
    ("e(211)_4", "e(31)_3 - e(22)_4 + e(22)_3"),
    ("e(121)_2", "e(31)_3 - e(13)_3"),
    ("e(121)_3", "e(31)_3 - e(13)_3"),
    ("e(121)_4", "e(31)_4 - e(31)_3 + e(31)_2 - e(13)_4 + e(13)_3 - e(13)_2"),
    ("e(112)_2", "-e(13)_2 + e(13)_3 - e(13)_4"),
    ("e(112)_3", "e(22)_3 - e(22)_4 - e(13)_3"),
    ("e(112)_4", "e(22)_4 - e(22)_3 - e(13)_3"),
    ("e(31)_2", "e(4)_3 - e(4)_4"),
    ("e(31)_3", "0"),
    ("e(31)_4", "e(4)_4 - e(4)_3"),
    ("e(22)_2", "2e(4)_2 - 2e(4)_3 + 2e(4)_4"),
    ("e(22)_3", "2e(4)_3"),
    ("e(22)_4", "2e(4)_3"),
    ("e(13)_2", "e(4)_3 - e(4)_4"),
    ("e(13)_3", "0"),
    ("e(13)_4", "e(4)_4 - e(4)_3"),
]

_compact = re.compile(r"e\((\d+)\)_(\d)")
_term = re.compile(r"([+-]?)\s*(\d*)\s*(e\(\d+\)_\d)")


def expand_name(compact):
    """
    "e(211)_3" -> "e(2,1,1)_3"
    """
    match = _compact.fullmatch(compact.strip())
    if match is None:
        raise InvalidInputError(f'Cannot read compact cell name "{compact}"')
    parts, label = match.groups()
    return f"e({','.join(parts)})_{label}"


def parse_chain(text):
    """
    read a signed sum of compact covering cells into a chain
    """
    text = text.strip()
    if text == "0":
        return dict()

    chain = dict()
    consumed = 0
    for match in _term.finditer(text):
        if text[consumed:match.start()].strip() != "":
            raise InvalidInputError(f'Cannot read chain "{text}"')
        consumed = match.end()

        sign, factor, cell = match.groups()
        coefficient = int(factor) if factor else 1
        if sign == "-":
            coefficient = -coefficient
        name = expand_name(cell)
        chain[name] = chain.get(name, 0) + coefficient

    if text[consumed:].strip() != "":
        raise InvalidInputError(f'Cannot read chain "{text}"')

    return {name: v for name, v in chain.items() if v != 0}


def published_covering_differentials():
    return {expand_name(source): parse_chain(target) for source, target in published_formulas}


class Mismatch:
    def __init__(self, source, expected, computed):
        self.source = source
        self.expected = expected
        self.computed = computed

    def __repr__(self):
        return f"Mismatch({self.source}: expected {self.expected}, computed {self.computed})"

    def to_dict(self):
        return dict(source=self.source, expected=self.expected, computed=self.computed)


def compare_published_differentials(c=None):
    """
    compare the machine generated boundary of every listed covering cell
    term by term with the published one, an empty list means agreement
    """
    if c is None:
        c = covering_complex()

    mismatches = []
    for source, expected in published_covering_differentials().items():
        degree = LabeledCell.parse(source).dimension
        computed = c.apply_boundary(degree, {source: 1})
        if computed != expected:
            logger.warning(f"Boundary of {source} differs from the published formula")
            mismatches.append(Mismatch(source, expected, computed))

    return mismatches

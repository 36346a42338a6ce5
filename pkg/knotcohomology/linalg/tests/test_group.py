# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import pytest

from knotcohomology.errors import InvalidInputError
from knotcohomology.linalg import AbelianGroup, hom_is_zero, ext_is_zero


@pytest.mark.timeout(60)
def test_canonical_form():
    assert AbelianGroup(0, [2, 3]) == AbelianGroup.cyclic(6)
    assert AbelianGroup(0, [2, 4, 3]).torsion == (2, 12)
    assert AbelianGroup(0, [1, 1]) == AbelianGroup.zero()
    assert AbelianGroup(1, [0, 2]).free_rank == 2
    assert AbelianGroup(0, [12, 60]).elementary_divisors() == [3, 3, 4, 4, 5]

    with pytest.raises(InvalidInputError):
        AbelianGroup(-1)


@pytest.mark.timeout(60)
@pytest.mark.parametrize(
    "text, group",
    [
        ("0", AbelianGroup()),
        ("Z", AbelianGroup(1)),
        ("Z^2", AbelianGroup(2)),
        ("Z_6", AbelianGroup(0, [6])),
        ("Z⊕Z_2", AbelianGroup(1, [2])),
        ("(Z_2)^2", AbelianGroup(0, [2, 2])),
        ("Z⊕Z_3", AbelianGroup(1, [3])),
    ]
)
def test_notation(text, group):
    assert AbelianGroup.parse(text) == group
    assert str(group) == text


@pytest.mark.timeout(60)
def test_parse_collapses_coprime_summands():
    assert AbelianGroup.parse("Z_3⊕Z_2") == AbelianGroup.cyclic(6)
    assert AbelianGroup.parse("Z_3 + Z") == AbelianGroup(1, [3])

    with pytest.raises(InvalidInputError):
        AbelianGroup.parse("Q")


@pytest.mark.timeout(60)
def test_hom_and_ext():
    z, z2, z3, z6 = (AbelianGroup.parse(s) for s in ["Z", "Z_2", "Z_3", "Z_6"])

    assert hom_is_zero(z2, z3)
    assert hom_is_zero(z2, z)
    assert not hom_is_zero(z, z3)
    assert not hom_is_zero(z6, z2)
    assert hom_is_zero(AbelianGroup(), z)

    assert ext_is_zero(z2, z3)
    assert ext_is_zero(z, z2)
    assert not ext_is_zero(z2, z)
    assert not ext_is_zero(z2, z2)
    assert ext_is_zero(z2, AbelianGroup())

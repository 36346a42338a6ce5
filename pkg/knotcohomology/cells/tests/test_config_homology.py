# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from math import inf

import pytest

from knotcohomology.cells import (
    config_homology,
    covering_complex,
    coefficient_chain_maps,
    circle_model_oracle,
    sign_coefficients_lemma,
    compare_published_differentials,
    published_covering_differentials,
    check_generating_cycles,
    parse_chain,
)
from knotcohomology.linalg import (
    AbelianGroup,
    homology,
    nonzero,
    class_order,
    coefficient_sequence_check,
    map_on_homology_is_injective,
)
from knotcohomology.rep import get_representation, sign, trivial

Z, Z2, Z3 = AbelianGroup(1), AbelianGroup.cyclic(2), AbelianGroup.cyclic(3)


@pytest.mark.timeout(300)
@pytest.mark.parametrize(
    "k, n, name, expected",
    [
        (2, 2, "sign", {3: Z2}),
        (2, 3, "sign", {5: Z2, 4: Z3}),
        (2, 4, "Z", {8: Z, 7: Z, 5: Z2}),
        (2, 4, "A2hat", {8: Z, 7: AbelianGroup(2), 6: AbelianGroup(1, [2]), 5: AbelianGroup(0, [2, 2])}),
        (2, 4, "A2", {7: Z, 6: AbelianGroup(1, [2]), 5: Z2}),
        (4, 2, "sign", {7: Z2, 5: Z2}),
        (4, 2, "Z", {8: Z, 6: Z2, 5: Z}),
        (4, 3, "sign", {11: Z2, 10: Z3, 9: Z2, 6: Z3}),
    ]
)
def test_config_homology(k, n, name, expected):
    assert nonzero(config_homology(k, n, get_representation(name, n))) == expected


@pytest.mark.timeout(300)
@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_sign_coefficients_kill_the_fundamental_class(n):
    groups = config_homology(2, n, sign(n))
    assert groups[2 * n].is_zero


@pytest.mark.timeout(60)
@pytest.mark.parametrize("k", [2, 3, 4])
def test_circle_model_oracle(k):
    assert homology(circle_model_oracle(k)) == config_homology(k, 2, sign(2))
    assert homology(circle_model_oracle(k, twisted=False)) == config_homology(k, 2, trivial(2))


@pytest.mark.timeout(300)
@pytest.mark.parametrize("rho", [2, 3])
def test_sign_coefficients_lemma(rho):
    assert sign_coefficients_lemma(rho) == []


@pytest.mark.timeout(60)
def test_covering_complex():
    c = covering_complex()
    assert c.ranks == {5: 3, 6: 9, 7: 9, 8: 3}
    assert homology(c) == config_homology(2, 4, get_representation("A2hat", 4))


@pytest.mark.timeout(60)
def test_published_differentials():
    published = published_covering_differentials()
    assert len(published) == 21
    assert published["e(2,2)_3"] == {"e(4)_3": 2}
    assert published["e(3,1)_3"] == {}
    assert compare_published_differentials() == []


@pytest.mark.timeout(60)
def test_class_orders():
    c = covering_complex()
    assert class_order(c, 8, parse_chain("e(1111)_2 + e(1111)_3 + e(1111)_4")) == inf
    assert class_order(c, 5, parse_chain("e(4)_2")) == 2
    assert class_order(c, 6, parse_chain("e(31)_3 - e(13)_3")) == 1
    assert class_order(c, 6, parse_chain("e(31)_3")) == 2


@pytest.mark.timeout(60)
@pytest.mark.parametrize("coefficients", ["Z", "A2hat"])
def test_generating_cycles(coefficients):
    assert check_generating_cycles(coefficients) == []


@pytest.mark.timeout(120)
def test_coefficient_sequence():
    inclusion, projection = coefficient_chain_maps()
    assert coefficient_sequence_check(inclusion, projection) == []
    assert map_on_homology_is_injective(inclusion, 8)
    assert map_on_homology_is_injective(inclusion, 7)

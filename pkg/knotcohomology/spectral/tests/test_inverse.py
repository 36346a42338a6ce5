# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import pytest

from knotcohomology.errors import InvalidInputError, MissingInputError
from knotcohomology.spectral import (
    Entry,
    FactRegistry,
    load_facts,
    empty_facts,
    aux_E1,
    collapse_aux,
    aux_bounds,
    check_aux_against_bounds,
)


def entries(mapping):
    return {coordinate: Entry.parse(text) for coordinate, text in mapping.items()}


table2_left = entries({
    (0, 8): "Z_2",
    (0, 6): "Z_2",
    (1, 6): "Z_2",
    (1, 5): "Z_3",
})

table2_right = entries({
    (0, 13): "Z_2",
    (0, 12): "Z_3",
    (0, 11): "Z_2",
    (0, 8): "Z_6",
    (0, 7): "Z_3",
    (1, 11): "Z_2",
    (1, 10): "Z_3",
    (1, 8): "Z⊕Z_2",
    (1, 7): "Z",
    (2, 9): "Z",
    (2, 8): "Z⊕Z_2",
    (2, 7): "Z_2",
})


@pytest.mark.timeout(300)
def test_aux_E1_rho2():
    assert dict(aux_E1(2).items()) == table2_left


@pytest.mark.timeout(600)
def test_aux_E1_rho3():
    table = aux_E1(3)
    assert dict(table.items()) == table2_right
    assert table[1, 8].annotation == "configured"
    assert table[0, 13].annotation == "computed"


@pytest.mark.timeout(300)
def test_collapse_rho2():
    collapse = collapse_aux(aux_E1(2))
    assert collapse.groups == {8: Entry.parse("Z_2"), 6: Entry.parse("Z_3")}
    assert collapse.facts == ["aux-rho2-d1-iso"]


@pytest.mark.timeout(600)
def test_collapse_rho3():
    facts = load_facts()
    collapse = collapse_aux(aux_E1(3, facts), facts)
    assert collapse.groups == {
        13: Entry.parse("Z_2"),
        12: Entry.parse("Z_3"),
        11: Entry.parse("Z⊕Z_3"),
        10: Entry.parse("T"),
        9: Entry.parse("T"),
        8: Entry.parse("Z⊕T"),
        7: Entry.parse("T"),
    }
    assert collapse.facts == ["aux-rho3-d1-free", "aux-rho3-d1-iso"]
    assert "triangle-block-homology" in facts.consumed


@pytest.mark.timeout(300)
def test_collapse_without_facts_keeps_bounds():
    facts = FactRegistry([fact for fact in load_facts() if fact.kind == "homology-values"])
    collapse = collapse_aux(aux_E1(2, facts), facts)
    assert collapse.groups == {8: Entry.parse("Z_2"), 7: Entry.parse("T"), 6: Entry.parse("T")}


@pytest.mark.timeout(300)
def test_collapse_is_deterministic():
    first = collapse_aux(aux_E1(2)).groups
    second = collapse_aux(aux_E1(2)).groups
    assert first == second
    assert all(first[d].annotation == second[d].annotation for d in first)


@pytest.mark.timeout(60)
def test_aux_E1_needs_the_triangle_block():
    with pytest.raises(MissingInputError) as excinfo:
        aux_E1(3, empty_facts())
    assert excinfo.value.block == "theta_1 - theta_0"


@pytest.mark.timeout(60)
def test_aux_E1_out_of_range():
    with pytest.raises(InvalidInputError):
        aux_E1(4)


@pytest.mark.timeout(60)
def test_aux_bounds():
    assert aux_bounds(2, 0) == (8, 8, 4)
    assert aux_bounds(3, 1) == (12, None, 9)
    assert aux_bounds(4, 2) == (16, None, None)
    assert aux_bounds(5, 2) == (21, None, 19)
    assert aux_bounds(4, 3) == (16, None, None)


@pytest.mark.timeout(600)
@pytest.mark.parametrize("rho", [2, 3])
def test_check_aux_against_bounds(rho):
    assert check_aux_against_bounds(rho) == []

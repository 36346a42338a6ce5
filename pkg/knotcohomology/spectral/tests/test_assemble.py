# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import pytest

from knotcohomology.errors import InvalidInputError
from knotcohomology.spectral import (
    Entry,
    FactRegistry,
    load_facts,
    assemble,
    main_page,
    rational_summary,
    RationalRank,
    check_wedge,
    q_of,
    q_symbolic,
    degree_symbolic,
    wedge_ok,
    column_bounds,
    pro99_bound,
    first_total,
    symbolic_column,
    stable_range,
    stable_dimension,
)


def stable_table(k):
    table = {
        0: "Z",
        2 * k - 5: "Z",
        4 * k - 9: "Z_2",
        4 * k - 6: "Z_3",
        6 * k - 14: "Z_2",
        6 * k - 13: "Z_3",
        6 * k - 12: "Z⊕Z_3",
    }
    if k == 4:
        table[10] = "Z_6"  # 4k - 6 and 6k - 14 coincide
    return {degree: Entry.parse(text) for degree, text in table.items()}


@pytest.mark.timeout(60)
@pytest.mark.parametrize("k", [4, 5, 6, 7])
def test_stable_cohomology_pinned(k):
    _, table, discrepancies = assemble(k)
    assert table.nonzero() == stable_table(k)
    assert table.t_max == 6 * k - 12
    assert discrepancies == []


@pytest.mark.timeout(60)
def test_stable_cohomology_k3():
    _, table, discrepancies = assemble(3)
    assert table.nonzero() == {
        0: Entry.parse("Z"),
        1: Entry.parse("Z"),
        3: Entry.parse("Z_2"),
        4: Entry.parse("Z_2"),
    }
    assert discrepancies == []


@pytest.mark.timeout(60)
def test_published_page_k3():
    page, _, _ = assemble(3)
    expected = {
        (-1, 2): "Z",
        (-2, 5): "Z_2",
        (-2, 8): "Z_3",
        (-3, 7): "Z_2",
        (-3, 8): "Z_3",
        (-3, 9): "Z⊕Z_3",
        (-3, 12): "Z⊕T",
        (-4, 9): "Z_2",
        (-4, 10): "T",
        (-4, 11): "Z⊕T",
        (-5, 11): "Z_2",
    }
    for coordinate, text in expected.items():
        assert page[coordinate] == Entry.parse(text)
    assert page[-2, 6].is_zero
    assert page[-2, 7].is_zero


@pytest.mark.timeout(60)
@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_page_is_inside_the_wedge(k):
    page, _, _ = assemble(k)
    assert check_wedge(page, k) == []


@pytest.mark.timeout(60)
def test_columns_shift_with_k():
    page3, _, _ = assemble(3)
    page5, _, _ = assemble(5)
    for rho in [1, 2, 3]:
        assert symbolic_column(page3, rho, 3) == symbolic_column(page5, rho, 5)


@pytest.mark.timeout(600)
@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_computed_mode_has_one_placement_discrepancy(k):
    assembly = assemble(k, mode="computed")
    assert [d.kind for d in assembly.discrepancies] == ["placement"]

    (discrepancy,) = assembly.discrepancies
    assert discrepancy.column == -2
    assert discrepancy.computed["q"] == 4 * k - 5
    assert discrepancy.published["q"] == 4 * k - 4
    assert discrepancy.degrees == [4 * k - 7, 4 * k - 6]
    assert str(discrepancy) == (
        "column p=-2: Z_3 at q=4k-5 (computed) against q=4k-4 (published), "
        "cohomology degree 4k-7 against 4k-6"
    )


@pytest.mark.timeout(600)
def test_computed_mode_table():
    _, table, _ = assemble(5, mode="computed")
    expected = stable_table(5)
    del expected[4 * 5 - 6]
    expected[4 * 5 - 7] = Entry.parse("Z_3")
    assert table.nonzero() == expected
    assert "aux-rho2-d1-iso" in table.consumed_facts


@pytest.mark.timeout(60)
def test_rational_summary():
    k = 5
    summary = rational_summary(k)
    assert summary == {
        0: RationalRank(0, 1, True),
        2 * k - 5: RationalRank(2 * k - 5, 1, True),
        6 * k - 12: RationalRank(6 * k - 12, 1, True),
        6 * k - 9: RationalRank(6 * k - 9, 1, True),
        8 * k - 17: RationalRank(8 * k - 17, 1, True),
    }
    assert str(summary[8 * k - 17]) == "1"


@pytest.mark.timeout(60)
def test_rational_summary_k4():
    assert rational_summary(4) == {
        0: RationalRank(0, 1, True),
        3: RationalRank(3, 1, True),
        12: RationalRank(12, 1, True),
        15: RationalRank(15, 2, True),
    }


def without_rational_rank(rank=None):
    facts = load_facts()
    (fact,) = [fact for fact in facts if fact.id == "main-infinite-p4"]
    if rank is None:
        del fact.data["rational_rank"]
    else:
        fact.data["rational_rank"] = rank
    return facts


@pytest.mark.timeout(60)
def test_rational_summary_lower_bound_without_rational_rank():
    summary = rational_summary(4, without_rational_rank())
    assert summary[15] == RationalRank(15, 2, False)
    assert str(summary[15]) == ">= 2"
    assert summary[12] == RationalRank(12, 1, True)


@pytest.mark.timeout(60)
def test_rational_rank_below_free_rank():
    with pytest.raises(InvalidInputError):
        rational_summary(4, without_rational_rank(0))


@pytest.mark.timeout(60)
def test_missing_facts_are_listed():
    facts = FactRegistry([fact for fact in load_facts() if fact.kind == "homology-values"])
    _, table, discrepancies = assemble(5, facts)
    assert table.missing_facts == ["column-bounds", "main-entry"]
    assert discrepancies == []
    assert table[0] == Entry.parse("Z")


@pytest.mark.timeout(60)
def test_main_page_preconditions():
    with pytest.raises(InvalidInputError):
        main_page(2, load_facts())
    with pytest.raises(InvalidInputError):
        main_page(4, load_facts(), mode="guessed")


@pytest.mark.timeout(60)
def test_coordinates():
    for k in [3, 4, 10]:
        assert q_of(1, 4, k) == 2 * k - 4
        assert q_of(3, 13, k) == 6 * k - 11
        assert q_of(2, 8, k) == 4 * k - 7
    assert q_symbolic(3, 13) == "6k-11"
    assert degree_symbolic(2, 6) == "4k-7"
    assert column_bounds(-4, 3) == (8, 9, 10)
    assert pro99_bound(4, 2) == 17
    assert first_total(4, 4) == 13
    assert not wedge_ok(-2, 3, 3)
    assert wedge_ok(-2, 4, 3)
    with pytest.raises(InvalidInputError):
        column_bounds(0, 3)


@pytest.mark.timeout(60)
def test_stable_range_boundary():
    assert stable_range(2, 10, 3)
    assert not stable_range(2, 9, 3)
    assert not stable_range(3, 10, 3)
    for k in [3, 4, 7]:
        assert stable_range(1, k + 2, k)
        assert not stable_range(1, k + 1, k)
    assert stable_dimension(2, 3) == 10
    assert stable_dimension(1, 5) == 7
    with pytest.raises(InvalidInputError):
        stable_dimension(0, 3)


@pytest.mark.timeout(60)
@pytest.mark.parametrize("k", [3, 5])
def test_assembly_dimension_covers_all_columns(k):
    assembly = assemble(k)
    rho_max = assembly.rho_max
    assert rho_max >= max(-p for p, _ in assembly.page)
    assert assembly.dimension == rho_max * (k + 2)
    assert all(stable_range(rho, assembly.dimension, k) for rho in range(1, rho_max + 1))
    assert not stable_range(rho_max, assembly.dimension - 1, k)

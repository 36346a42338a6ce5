# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import pytest

from knotcohomology.errors import InconsistentSequenceError
from knotcohomology.linalg import AbelianGroup, pair_sequence_solve


def graded(**kwargs):
    return {int(d[1:]): AbelianGroup.parse(s) for d, s in kwargs.items()}


@pytest.mark.timeout(60)
def test_complement_of_collinear_triples():
    closed = graded(d5="Z_2", d4="Z_3")
    total = graded(d11="Z_2", d10="Z_3", d9="Z_2", d6="Z_3")

    solution = pair_sequence_solve(closed, total)

    assert solution.resolved
    assert solution.nonzero() == graded(d11="Z_2", d10="Z_3", d9="Z_2", d6="Z_6", d5="Z_3")


@pytest.mark.timeout(60)
def test_empty_closed_subset():
    total = graded(d3="Z", d1="Z_2")
    solution = pair_sequence_solve(dict(), total)

    assert solution.resolved
    assert solution.nonzero() == total


@pytest.mark.timeout(60)
def test_unknown_restriction_map():
    solution = pair_sequence_solve(graded(d5="Z"), graded(d5="Z"))

    assert not solution.resolved
    assert solution.ambiguous_degrees[0] == 5


@pytest.mark.timeout(60)
def test_declared_maps():
    solution = pair_sequence_solve(graded(d5="Z"), graded(d5="Z"), maps={5: "iso"})
    assert solution.resolved
    assert solution.nonzero() == dict()

    solution = pair_sequence_solve(graded(d5="Z"), graded(d5="Z"), maps={5: "zero"})
    assert solution.nonzero() == graded(d5="Z", d6="Z")

    with pytest.raises(InconsistentSequenceError) as excinfo:
        pair_sequence_solve(graded(d5="Z"), graded(d5="Z_2"), maps={5: "iso"})
    assert excinfo.value.degree == 5


@pytest.mark.timeout(60)
def test_extension_ambiguity():
    solution = pair_sequence_solve(graded(d3="Z_2"), graded(d4="Z_2"))
    assert not solution.resolved
    assert solution.ambiguous_degrees == [4]


@pytest.mark.timeout(60)
def test_declared_maps_against_known_complement():
    closed, total = graded(d5="Z"), graded(d5="Z")

    solution = pair_sequence_solve(closed, total, maps={5: "iso"}, h_open=dict())
    assert solution.nonzero() == dict()

    solution = pair_sequence_solve(closed, total, maps={5: "zero"}, h_open=graded(d5="Z", d6="Z"))
    assert solution.nonzero() == graded(d5="Z", d6="Z")

    with pytest.raises(InconsistentSequenceError) as excinfo:
        pair_sequence_solve(closed, total, maps={5: "zero"}, h_open=dict())
    assert excinfo.value.degree == 5
    assert "zero at degree 5" in str(excinfo.value)


@pytest.mark.timeout(60)
def test_known_complement_with_open_extension():
    closed, total = graded(d3="Z_2"), graded(d4="Z")

    solution = pair_sequence_solve(closed, total, h_open=graded(d4="Z"))
    assert solution.ambiguous_degrees == [4]

    with pytest.raises(InconsistentSequenceError) as excinfo:
        pair_sequence_solve(closed, total, h_open=graded(d4="Z_2"))
    assert excinfo.value.degree == 4

    with pytest.raises(InconsistentSequenceError) as excinfo:
        pair_sequence_solve(closed, total, h_open=graded(d4="Z", d9="Z_3"))
    assert excinfo.value.degree == 9

# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from collections import Counter

import numpy as np
import pytest

from knotcohomology.errors import InvalidInputError
from knotcohomology.cells import (
    NestedCell,
    LabeledCell,
    nested_cells,
    fuks_cells,
    boundary_terms,
    fuks_boundary,
    config_complex,
)
from knotcohomology.linalg import verify_complex
from knotcohomology.rep import sign, trivial, matching_rep_hat, as_matrix


@pytest.mark.timeout(60)
def test_fuks_cells():
    cells = fuks_cells(4)
    assert len(cells) == 8
    assert Counter(cell.dimension for cell in cells) == {8: 1, 7: 3, 6: 3, 5: 1}
    assert [cell.name for cell in cells if cell.dimension == 7] == ["e(2,1,1)", "e(1,2,1)", "e(1,1,2)"]

    assert [(cell.name, cell.dimension) for cell in fuks_cells(2)] == [("e(1,1)", 4), ("e(2)", 3)]
    assert [(cell.name, cell.dimension) for cell in fuks_cells(3)] == [
        ("e(1,1,1)", 6), ("e(2,1)", 5), ("e(1,2)", 5), ("e(3)", 4)
    ]

    for n in [1, 7]:
        with pytest.raises(InvalidInputError):
            fuks_cells(n)


@pytest.mark.timeout(60)
def test_nested_cells():
    cells = nested_cells(4, 3)
    assert cells[0].dimension == 12
    assert cells[-1].name == "e([[3]])"
    assert cells[-1].dimension == 6
    assert Counter(cell.dimension for cell in nested_cells(4, 2)) == {8: 1, 7: 1, 6: 1, 5: 1}

    cell = NestedCell(3, ((2,), (1, 1)))
    assert cell.n == 4
    assert cell.group_counts == [2, 3, 4]
    assert cell.dimension == 9


@pytest.mark.timeout(60)
@pytest.mark.parametrize("name", ["e(2,1,1)", "e(4)", "e([1],[1,1])", "e([[1],[1,1]])", "e([[3]])"])
def test_cell_names(name):
    assert NestedCell.parse(name).name == name


@pytest.mark.timeout(60)
def test_cell_name_errors():
    assert NestedCell.parse("e([[1],[1,1]])").k == 4
    assert LabeledCell.parse("e(2,1,1)_3") == LabeledCell(NestedCell(2, (2, 1, 1)), 3)
    assert LabeledCell.parse("e(2,1,1)_3").name == "e(2,1,1)_3"

    for text in ["f(1)", "e()", "e([1],2)", "e(0,1)", "e([1]"]:
        with pytest.raises(InvalidInputError):
            NestedCell.parse(text)
    with pytest.raises(InvalidInputError):
        NestedCell.parse("e(2,1)", k=3)


@pytest.mark.timeout(60)
def test_boundary_terms_of_plane_cell():
    terms = boundary_terms(NestedCell(2, (2, 1, 1)))
    assert len(terms) == 5
    assert Counter(term.face.name for term in terms) == {"e(3,1)": 3, "e(2,2)": 2}
    assert all(sorted(term.permutation) == [1, 2, 3, 4] for term in terms)
    assert all(term.face.dimension == 6 for term in terms)


@pytest.mark.timeout(60)
def test_fuks_boundary_with_matching_coefficients():
    hat = matching_rep_hat()

    result = fuks_boundary(NestedCell(2, (2, 2)), hat)
    assert list(result) == [NestedCell(2, (4,))]
    assert np.array_equal(result[NestedCell(2, (4,))], as_matrix([[2, 0, 0], [-2, 2, 2], [2, 0, 0]]))

    result = fuks_boundary(NestedCell(2, (3, 1)), hat)
    matrix = result[NestedCell(2, (4,))]
    assert list(matrix[:, 1]) == [0, 0, 0]

    with pytest.raises(InvalidInputError):
        fuks_boundary(NestedCell(2, (2, 1)), hat)


@pytest.mark.timeout(120)
@pytest.mark.parametrize(
    "k, n",
    [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (4, 2), (4, 3), (5, 2)]
)
def test_boundary_squares_to_zero(k, n):
    for rep in [sign(n), trivial(n)]:
        assert verify_complex(config_complex(k, n, rep)) == []


@pytest.mark.timeout(60)
def test_boundary_squares_to_zero_with_matching_coefficients():
    assert verify_complex(config_complex(2, 4, matching_rep_hat())) == []


@pytest.mark.timeout(60)
def test_unsupported_configuration_spaces():
    with pytest.raises(InvalidInputError):
        config_complex(2, 7, sign(7))
    with pytest.raises(InvalidInputError):
        config_complex(3, 4, sign(4))
    with pytest.raises(InvalidInputError):
        config_complex(2, 3, sign(4))

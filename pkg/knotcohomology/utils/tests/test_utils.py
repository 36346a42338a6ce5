# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from importlib import import_module
from pkgutil import walk_packages

import pytest

import knotcohomology
from knotcohomology.utils import ravel, splitlist, formatlist, formatslug, formattitle, hexdigest


@pytest.mark.timeout(60)
@pytest.mark.parametrize(
    "values, expected",
    [
        (None, []),
        ("table5", ["table5"]),
        (["aux-pages,table5", "formula-utilities"], ["aux-pages", "table5", "formula-utilities"]),
        ([["a"], "b, c"], ["a", "b", "c"]),
    ]
)
def test_splitlist(values, expected):
    assert splitlist(values) == expected


@pytest.mark.timeout(60)
def test_ravel():
    assert ravel([[1, [2]], 3]) == [1, 2, 3]
    assert ravel({"a": 1}) == {"a": 1}


@pytest.mark.timeout(60)
def test_format():
    assert formatlist(["json", "markdown"]) == '"json" or "markdown"'
    assert formatslug("figure1 k=3") == "figure1-k-3"
    assert formattitle("table2-left") == "Table2 Left"


@pytest.mark.timeout(60)
def test_hexdigest_is_independent_of_key_order():
    assert hexdigest({"a": 1, "b": [2]}) == hexdigest({"b": [2], "a": 1})
    assert hexdigest({"a": 1}) != hexdigest({"a": 2})


@pytest.mark.timeout(60)
def test_module_docstrings_are_not_blank():
    blank = []
    for info in walk_packages(knotcohomology.__path__, prefix="knotcohomology."):
        if ".tests" in info.name:
            continue
        module = import_module(info.name)
        if module.__doc__ is not None and module.__doc__.strip() == "":
            blank.append(info.name)
    assert blank == []

# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import json

import pytest

from knotcohomology.io import DocumentFile, dumps_json


@pytest.mark.timeout(60)
def test_dumps_json_is_stable():
    a = dumps_json({"b": 1, "a": {"5": "Z_2", "4": "Z_3"}})
    b = dumps_json({"a": {"4": "Z_3", "5": "Z_2"}, "b": 1})
    assert a == b
    assert a.endswith("\n")
    assert "Z_2" in a


@pytest.mark.timeout(60)
def test_document_file(tmp_path):
    outdir = tmp_path / "out"
    obj = {"k": 4, "entries": [{"degree": 0, "group": "Z"}]}

    with DocumentFile(outdir, "table1 k=4") as document:
        assert document.write(obj)

    filename = outdir / "table1-k-4.json"
    assert json.loads(filename.read_text()) == obj
    assert not (outdir / ".table1-k-4.json.lock").exists()

    with DocumentFile(outdir, "table1 k=4") as document:
        assert not document.write(obj)


@pytest.mark.timeout(60)
def test_document_file_markdown(tmp_path):
    with DocumentFile(tmp_path, "table5", fmt="markdown") as document:
        document.write("| degree |\n")
    assert (tmp_path / "table5.md").read_text() == "| degree |\n"

    with pytest.raises(ValueError):
        DocumentFile(tmp_path, "table5", fmt="pdf")

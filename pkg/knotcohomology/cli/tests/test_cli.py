# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import json
from io import StringIO

import pytest
from marshmallow import ValidationError

from knotcohomology.cli import checks as checks_module
from knotcohomology.cli.checks import Check, check_ids
from knotcohomology.cli.config import load_config
from knotcohomology.cli.parser import parse_args
from knotcohomology.cli.run import run
from knotcohomology.linalg import AbelianGroup, homology, nonzero
from knotcohomology.model import ChainComplexSchema
from knotcohomology.resource import facts_file


def run_args(args):
    stream = StringIO()
    code = run(parse_args(args), stream=stream)
    return code, stream.getvalue()


@pytest.fixture(autouse=True)
def no_output_dir(monkeypatch):
    monkeypatch.delenv("KNOTCOHOMOLOGY_OUTPUT_DIR", raising=False)
    monkeypatch.delenv("KNOTCOHOMOLOGY_FACTS", raising=False)


@pytest.mark.timeout(60)
def test_parser():
    opts = parse_args(["--jobs", "2", "verify", "--only", "table5,aux-pages", "--only", "formula-utilities"])
    assert opts.command == "verify"
    assert opts.jobs == 2

    config = load_config(opts)
    assert config["only"] == ["table5", "aux-pages", "formula-utilities"]

    opts = parse_args(["graph-complex", "--a", "4", "--pred", "2connected"])
    assert load_config(opts)["pred"] == "two_connected"

    with pytest.raises(SystemExit):
        parse_args([])


@pytest.mark.timeout(60)
@pytest.mark.parametrize(
    "args",
    [
        ["graph-complex", "--a", "6"],
        ["config-homology", "--k", "2", "--n", "9"],
        ["config-homology", "--k", "2", "--n", "3", "--rep", "B3"],
        ["tables", "--which", "table1", "--k", "2"],
        ["tables", "--which", "table1"],
        ["verify", "--only", "no-such-check"],
        ["--jobs", "0", "verify"],
    ],
)
def test_config_validation(args):
    with pytest.raises(ValidationError):
        load_config(parse_args(args))


@pytest.mark.timeout(60)
def test_config_homology_json():
    code, output = run_args(["config-homology", "--k", "2", "--n", "3", "--rep", "sign"])
    assert code == 0
    assert json.loads(output) == {"5": {"rank": 0, "torsion": [2]}, "4": {"rank": 0, "torsion": [3]}}

    _, again = run_args(["config-homology", "--k", "2", "--n", "3", "--rep", "sign"])
    assert again == output


@pytest.mark.timeout(60)
def test_invalid_input_exit_code():
    code, output = run_args(["config-homology", "--k", "2", "--n", "9"])
    assert code == 2
    document = json.loads(output)
    assert document["error"]["type"] == "ValidationError"
    assert "9 points" in document["error"]["message"]


@pytest.mark.timeout(300)
def test_missing_fact_exit_code(tmp_path):
    with open(facts_file(), "r", encoding="utf-8") as f:
        document = json.load(f)
    document["facts"] = [fact for fact in document["facts"] if fact["id"] != "triangle-block-homology"]
    path = tmp_path / "facts.json"
    path.write_text(json.dumps(document, ensure_ascii=False), encoding="utf-8")

    code, output = run_args(["--facts", str(path), "tables", "--which", "table2-right"])
    assert code == 2
    error = json.loads(output)["error"]
    assert error["type"] == "MissingInputError"
    assert "triangle block" in error["message"]


@pytest.mark.timeout(60)
def test_graph_complex_document():
    code, output = run_args(["graph-complex", "--a", "4"])
    assert code == 0
    assert json.loads(output) == {"2": {"rank": 6, "torsion": []}}


@pytest.mark.timeout(60)
@pytest.mark.parametrize(
    "args, expected",
    [
        (["graph-complex", "--a", "4", "--complex"], {2: AbelianGroup(6)}),
        (
            ["config-homology", "--k", "2", "--n", "3", "--rep", "sign", "--complex"],
            {5: AbelianGroup.cyclic(2), 4: AbelianGroup.cyclic(3)},
        ),
    ],
)
def test_complex_export_loads_back(args, expected):
    code, output = run_args(args)
    assert code == 0
    c = ChainComplexSchema().loads(output)
    assert nonzero(homology(c)) == expected

    code, markdown = run_args(["--format", "markdown"] + args)
    assert code == 0
    assert markdown.startswith("# ")
    assert "rank" in markdown


@pytest.mark.timeout(300)
def test_tables_table5_markdown():
    code, output = run_args(["--format", "markdown", "tables", "--which", "table5"])
    assert code == 0
    assert output.startswith("# Table5\n")

    lines = output.splitlines()
    assert any(line.startswith("| A2hat") and "Z⊕Z_2" in line for line in lines)
    assert sum(line.startswith("|") for line in lines) == 5


@pytest.mark.timeout(300)
def test_tables_table2_left():
    code, output = run_args(["tables", "--which", "table2-left"])
    assert code == 0
    document = json.loads(output)
    entries = {(e["x"], e["y"]): e["group"] for e in document["entries"]}
    assert entries == {(0, 8): "Z_2", (0, 6): "Z_2", (1, 6): "Z_2", (1, 5): "Z_3"}


@pytest.mark.timeout(60)
def test_verify_only():
    code, output = run_args(["--jobs", "1", "verify", "--only", "formula-utilities"])
    assert code == 0
    document = json.loads(output)
    assert document["passed"] is True
    assert [c["id"] for c in document["checks"]] == ["formula-utilities"]


@pytest.mark.timeout(60)
def test_verify_failure_exit_code(monkeypatch):
    broken = Check("formula-utilities", "always fails", lambda: ["broken"])
    monkeypatch.setattr(checks_module, "checks", [broken])

    code, output = run_args(["--jobs", "1", "verify", "--only", "formula-utilities"])
    assert code == 1
    document = json.loads(output)
    assert document["checks"][0]["failures"] == ["broken"]


@pytest.mark.timeout(60)
def test_every_check_has_an_id():
    assert len(check_ids) == 15
    assert len(set(check_ids)) == len(check_ids)


@pytest.mark.timeout(60)
def test_outdir(tmp_path):
    outdir = tmp_path / "out"
    code, output = run_args(["--outdir", str(outdir), "config-homology", "--k", "2", "--n", "3", "--rep", "sign"])
    assert code == 0
    assert (outdir / "config-homology-k2-n3-sign.json").read_text(encoding="utf-8") == output


@pytest.mark.timeout(600)
def test_report():
    code, output = run_args(["--jobs", "1", "report", "--k", "4"])
    assert code == 0
    document = json.loads(output)
    (entry,) = document["ledger"]
    assert entry["k"] == 4
    assert [d["kind"] for d in entry["discrepancies"]] == ["placement"]
    assert len(document["open_questions"]) > 0

# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import json
from copy import deepcopy

import pytest
from marshmallow import ValidationError

from knotcohomology.linalg import AbelianGroup, homology, nonzero
from knotcohomology.model import (
    AbelianGroupSchema,
    ChainComplexSchema,
    FactsFileSchema,
    GeometricFactSchema,
    SSTableSchema,
    KnotCohomologyTableSchema,
    CheckResultSchema,
)
from knotcohomology.resource import facts_file
from knotcohomology.spectral import assemble, load_facts, dump_facts

projective_space_document = {
    "name": "RP^3",
    "degrees": [0, 3],
    "ranks": {"0": 1, "1": 1, "2": 1, "3": 1},
    "boundaries": {"1": [[0, 0, 2]], "3": [[0, 0, 2]]},
}


@pytest.mark.timeout(60)
def test_abelian_group_schema():
    schema = AbelianGroupSchema()
    group = schema.load({"rank": 1, "torsion": [2, 3]})
    assert group == AbelianGroup.parse("Z⊕Z_6")
    assert schema.dump(AbelianGroup.cyclic(2)) == {"rank": 0, "torsion": [2]}

    with pytest.raises(ValidationError):
        schema.load({"rank": -1, "torsion": []})


@pytest.mark.timeout(60)
def test_chain_complex_schema():
    c = ChainComplexSchema().load(projective_space_document)
    z2 = AbelianGroup.cyclic(2)
    assert nonzero(homology(c)) == {0: z2, 2: z2}

    document = ChainComplexSchema().dump(c)
    assert document == projective_space_document


@pytest.mark.timeout(60)
@pytest.mark.parametrize(
    "path, value",
    [
        (("degrees",), [3, 0]),
        (("ranks",), {"0": 1, "1": 1, "2": 1, "3": 1, "7": 1}),
        (("boundaries",), {"1": [[0, 0]]}),
        (("boundaries",), {"1": [[1, 0, 2]]}),
    ]
)
def test_chain_complex_schema_errors(path, value):
    document = deepcopy(projective_space_document)
    document[path[0]] = value
    with pytest.raises(ValidationError):
        ChainComplexSchema().load(document)


@pytest.mark.timeout(60)
def test_bundled_facts_file():
    with open(facts_file(), "r") as f:
        document = FactsFileSchema().loads(f.read())
    kinds = set(fact.kind for fact in document["facts"])
    assert kinds == {
        "aux-d1-iso",
        "aux-d1-free-to-infinite",
        "homology-values",
        "main-infinite",
        "main-entry",
        "column-bounds",
    }
    assert all(len(fact.provenance) > 0 for fact in document["facts"])


@pytest.mark.timeout(60)
def test_facts_round_trip():
    facts = load_facts()
    document = json.loads(dump_facts(facts))
    assert [fact["id"] for fact in document["facts"]] == [fact.id for fact in facts]
    assert FactsFileSchema().validate(document) == {}


@pytest.mark.timeout(60)
def test_fact_schema_errors():
    fact = {
        "id": "aux-rho2-d1-iso",
        "rho": 2,
        "kind": "aux-d1-iso",
        "data": {"source": [1, 6], "target": [0, 6]},
        "provenance": "declared",
    }
    assert GeometricFactSchema().validate(fact) == {}

    with pytest.raises(ValidationError):
        FactsFileSchema().load({"facts": [fact, fact]})

    broken = dict(fact, data={"source": [1, 6, 0], "target": [0, 6]})
    assert GeometricFactSchema().validate(broken) != {}

    broken = dict(fact, kind="aux-d2-iso")
    assert GeometricFactSchema().validate(broken) != {}

    broken = {
        "id": "triangle",
        "kind": "homology-values",
        "data": {"block": "triangle", "values": {"5": "Z⊕Y"}},
        "provenance": "declared",
    }
    assert GeometricFactSchema().validate(broken) != {}


@pytest.mark.timeout(60)
@pytest.mark.parametrize(
    "entries, valid",
    [
        ([{"p": -2, "q": 5, "group": "Z_2"}, {"p": -4, "q": 10, "group": "T"}], True),
        ([{"p": -2, "q": 5, "group": "Z_2"}, {"p": -2, "q": 6, "group": "0"}], False),
        ([{"p": -2, "q": 5, "group": "Z_2"}, {"p": -2, "q": 5, "group": "Z_3"}], False),
    ],
)
def test_main_entry_omits_zeros(entries, valid):
    fact = {
        "id": "main-page",
        "kind": "main-entry",
        "data": {"k": 3, "entries": entries},
        "provenance": "declared",
    }
    assert (GeometricFactSchema().validate(fact) == {}) is valid


@pytest.mark.timeout(60)
def test_bundled_main_page_has_no_zero_entries():
    (fact,) = [fact for fact in load_facts() if fact.kind == "main-entry"]
    assert all(item["group"] not in ("0", "") for item in fact.data["entries"])
    assert len(fact.data["entries"]) == 14


@pytest.mark.timeout(60)
def test_main_infinite_rational_rank():
    fact = {
        "id": "main-infinite",
        "rho": 4,
        "kind": "main-infinite",
        "data": {"p": -4, "q": {"k": 8, "const": -13}, "group": "Z⊕?", "rational_rank": 1},
        "provenance": "declared",
    }
    assert GeometricFactSchema().validate(fact) == {}

    broken = deepcopy(fact)
    broken["data"]["rational_rank"] = -1
    assert GeometricFactSchema().validate(broken) != {}


@pytest.mark.timeout(60)
def test_table_schemas():
    page, table, _ = assemble(4)
    assert KnotCohomologyTableSchema().validate(table.to_dict()) == {}
    assert SSTableSchema().validate(page.to_dict()) == {}

    document = table.to_dict()
    document["mode"] = "guessed"
    assert KnotCohomologyTableSchema().validate(document) != {}


@pytest.mark.timeout(60)
def test_check_result_schema():
    result = CheckResultSchema().load({"id": "table5", "passed": True, "description": "Table 5"})
    assert result["failures"] == []

# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

"""
documents emitted by the command line, each with a json and a markdown form
"""

import json
import logging

import pandas as pd
from tabulate import tabulate

from .checks import table5_row, table5_expected, run_check, check_ids
from .pool import fan_out
from ..graph import graph_complex
from ..cells import config_complex
from ..rep import get_representation
from ..linalg import homology, nonzero
from ..model import AbelianGroupSchema, ChainComplexSchema, CheckResultSchema, KnotCohomologyTableSchema, SSTableSchema
from ..spectral import load_facts, dump_facts, aux_E1, assemble, rational_summary, symbolic_column
from ..io import dumps_json
from ..utils import formattitle, hexdigest, inflect_engine as p
from ..logging import result_levelno

logger = logging.getLogger("knotcohomology.cli")

open_questions = [
    "The Z_3 of column p=-2 lies at q=4k-5 when computed from the auxiliary sequence for rho=2 and at "
    "q=4k-4 in the published page. Pinned mode follows the published page, computed mode reports the "
    "difference.",
    "The published differential from (2,8) to (1,8) at rho=3 is indexed differently from its "
    "neighbours, the facts file records the reading that is used.",
    "Differentials of the covering complex that differ from the published formulas are reported, "
    "never patched.",
    "The published grid for k=3 omits the finite group T at (-5,12).",
    "E_1^{-4,8k-13} is Z⊕T when its fact carries a rational rank, otherwise Z⊕? and a lower bound.",
    "Strict collapse raises only for differentials that are neither forced nor configured, "
    "differentials into or out of finite groups leave T.",
]


class Document:
    def __init__(self, name, content, records=None, columns=None, index=None):
        self.name = name
        self.content = content
        self.records = records
        self.columns = columns
        self.index = index

    def __repr__(self):
        return f'Document("{self.name}")'

    def to_json(self):
        return dumps_json(self.content)

    def to_markdown(self):
        title = f"# {formattitle(self.name)}\n\n"
        if self.records is None or len(self.records) == 0:
            return title + "no entries\n"

        dataframe = pd.DataFrame.from_records(self.records)
        if self.columns is not None:
            dataframe = dataframe.pivot(index=self.index, columns=self.columns, values="group")
            dataframe = dataframe.sort_index(ascending=False)
            dataframe = dataframe[sorted(dataframe.columns, reverse=True)]
            dataframe = dataframe.fillna("")
            table_str = tabulate(dataframe, headers="keys", tablefmt="pipe", showindex=True)
        else:
            table_str = tabulate(dataframe, headers="keys", tablefmt="pipe", showindex=False)

        return title + table_str + "\n"

    def render(self, fmt="json"):
        if fmt == "markdown":
            return self.to_markdown()
        return self.to_json()


def graded_document(groups):
    schema = AbelianGroupSchema()
    return {str(d): schema.dump(g) for d, g in sorted(nonzero(groups).items(), reverse=True)}


def graded_records(groups):
    return [dict(degree=d, group=str(g)) for d, g in sorted(nonzero(groups).items(), reverse=True)]


def chain_complex_document(name, c):
    """
    the complex in the form ChainComplexSchema reads back, with the ranks as
    records
    """
    records = [dict(degree=d, rank=c.ranks[d], boundary_entries=len(c.boundary(d).triples())) for d in c.range()]
    return Document(f"{name}-complex", ChainComplexSchema().dump(c), records)


def graph_complex_document(a, pred, allow_large=False, export_complex=False):
    name = f"graph-complex-a{a}-{pred}"
    c = graph_complex(a, pred, allow_large=allow_large)
    if export_complex:
        return chain_complex_document(name, c)
    groups = homology(c)
    return Document(name, graded_document(groups), graded_records(groups))


def config_homology_document(k, n, rep, export_complex=False):
    name = f"config-homology-k{k}-n{n}-{rep}"
    c = config_complex(k, n, get_representation(rep, n))
    if export_complex:
        return chain_complex_document(name, c)
    groups = homology(c)
    return Document(name, graded_document(groups), graded_records(groups))


def _page_records(table):
    x, y = table.coordinates
    return [{x: cx, y: cy, "group": str(entry)} for (cx, cy), entry in table.items()]


def _page_document(name, table):
    content = SSTableSchema().dump(table.to_dict())
    x, y = table.coordinates
    return Document(name, content, _page_records(table), columns=x, index=y)


def table2_document(rho, facts):
    which = {2: "table2-left", 3: "table2-right"}[rho]
    return _page_document(which, aux_E1(rho, facts))


def table5_document():
    content, records = dict(), list()
    for name in table5_expected:
        row = table5_row(name)
        schema = AbelianGroupSchema()
        content[name] = {str(d): schema.dump(g) for d, g in sorted(row.items(), reverse=True)}
        records.extend(dict(coefficients=name, degree=d, group=str(g)) for d, g in row.items())
    document = Document("table5", content, records, columns="degree", index="coefficients")
    return document


def figure1_document(k, mode, facts):
    page = assemble(k, facts, mode).page
    return _page_document(f"figure1-k{k}-{mode}", page)


def table1_document(k, mode, facts):
    assembly = assemble(k, facts, mode)
    content = KnotCohomologyTableSchema().dump(assembly.table.to_dict())
    content["discrepancies"] = [d.to_dict() for d in assembly.discrepancies]
    records = [dict(degree=i, group=str(entry), annotation=entry.annotation) for i, entry in assembly.table.entries.items()]
    return Document(f"table1-k{k}-{mode}", content, records)


def column_p3_document(k, mode, facts):
    page = assemble(k, facts, mode).page
    records = [dict(q=q, group=str(entry)) for q, entry in symbolic_column(page, 3, k)]
    return Document("column-p3", dict(k=k, mode=mode, column=records), records)


def rational_document(k, mode, facts):
    summary = rational_summary(k, facts, mode)
    records = [dict(degree=d, rank=str(rank)) for d, rank in sorted(summary.items())]
    content = dict(k=k, mode=mode, ranks=[rank.to_dict() for _, rank in sorted(summary.items())])
    return Document(f"rational-k{k}-{mode}", content, records)


def tables_document(which, k=None, mode="pinned", facts=None):
    if facts is None:
        facts = load_facts()

    if which == "table2-left":
        return table2_document(2, facts)
    elif which == "table2-right":
        return table2_document(3, facts)
    elif which == "table5":
        return table5_document()
    elif which == "figure1":
        return figure1_document(k, mode, facts)
    elif which == "table1":
        return table1_document(k, mode, facts)
    elif which == "column-p3":
        return column_p3_document(k or 5, mode, facts)
    elif which == "rational":
        return rational_document(k, mode, facts)

    raise ValueError(f'Unknown table "{which}"')


def verify_document(only=None, jobs=1):
    ids = check_ids if only is None or len(only) == 0 else only

    logger.info(f"Running {p.no('check', len(ids))}")
    results = fan_out(run_check, ids, jobs)
    results = CheckResultSchema(many=True).dump(results)

    passed = all(result["passed"] for result in results)
    for result in results:
        logger.log(result_levelno, f'{"passed" if result["passed"] else "FAILED"} {result["id"]}')

    records = [
        dict(id=result["id"], passed=result["passed"], failures=len(result["failures"])) for result in results
    ]
    return Document("verify", dict(passed=passed, checks=results), records)


def ledger_entry(arguments):
    k, facts_path = arguments
    facts = load_facts(facts_path)
    assembly = assemble(k, facts, "computed")
    return dict(
        k=k,
        facts_digest=hexdigest(json.loads(dump_facts(facts))),
        discrepancies=[d.to_dict() for d in assembly.discrepancies],
        consumed_facts=assembly.table.consumed_facts,
        missing_facts=assembly.table.missing_facts,
    )


def report_document(ks=None, facts_path=None, jobs=1):
    if ks is None or len(ks) == 0:
        ks = [3, 4, 5, 6]

    ledger = fan_out(ledger_entry, [(k, facts_path) for k in sorted(set(ks))], jobs)

    records = [
        dict(k=entry["k"], column=d["column"], kind=d["kind"], message=d["message"])
        for entry in ledger
        for d in entry["discrepancies"]
    ]
    content = dict(ledger=ledger, open_questions=open_questions)
    return Document("report", content, records)

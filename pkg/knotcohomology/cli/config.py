# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

"""
validation of the command line options before any computation starts
"""

from marshmallow import fields, validate, Schema, EXCLUDE, validates_schema, ValidationError, post_load

from .parser import tables, formats, graph_predicates
from .checks import check_ids, optional_checks
from ..cells import check_supported
from ..graph.complex import max_vertex_count, large_vertex_count
from ..rep import registry_names
from ..rep.builtin import aliases
from ..spectral import modes
from ..utils import splitlist, formatlist
from ..errors import InvalidInputError

optional_check_ids = [check.id for check in optional_checks]


class RunConfigSchema(Schema):
    class Meta:
        unknown = EXCLUDE

    command = fields.Str(
        required=True, validate=validate.OneOf(["graph-complex", "config-homology", "tables", "verify", "report"])
    )

    outdir = fields.Str(allow_none=True)
    facts = fields.Str(allow_none=True)
    verbose = fields.Bool(missing=False)
    format = fields.Str(missing="json", validate=validate.OneOf(formats))
    jobs = fields.Int(missing=1, validate=validate.Range(min=1))
    allow_large = fields.Bool(missing=False)
    debug = fields.Bool(missing=False)

    a = fields.Int(validate=validate.Range(min=2, max=max_vertex_count))
    pred = fields.Str(validate=validate.OneOf(list(graph_predicates)))

    k = fields.Raw(allow_none=True)
    n = fields.Int()
    rep = fields.Str()
    complex = fields.Bool(missing=False)

    which = fields.Str(validate=validate.OneOf(tables))
    mode = fields.Str(validate=validate.OneOf(modes))

    only = fields.List(fields.Str(), allow_none=True)
    stretch = fields.Bool(missing=False)

    @validates_schema
    def validate_graph_complex(self, data, **kwargs):
        if data.get("command") != "graph-complex":
            return
        a = data.get("a")
        if a is not None and a >= large_vertex_count and not data.get("allow_large"):
            raise ValidationError(f"Graph complexes with {a} vertices need --allow-large", "a")

    @validates_schema
    def validate_config_homology(self, data, **kwargs):
        if data.get("command") != "config-homology":
            return
        k, n, rep = data.get("k"), data.get("n"), data.get("rep")
        if not isinstance(k, int) or n is None:
            raise ValidationError("Need integer values for k and n", "k")
        try:
            check_supported(k, n)
        except InvalidInputError as e:
            raise ValidationError(str(e), "n")
        if rep not in registry_names and rep not in aliases:
            raise ValidationError(f'Unknown representation "{rep}", expected {formatlist(registry_names)}', "rep")

    @validates_schema
    def validate_k(self, data, **kwargs):
        if data.get("command") not in ["tables", "report"]:
            return
        k = data.get("k")
        values = k if isinstance(k, list) else [k]
        for value in values:
            if value is None:
                continue
            if not isinstance(value, int) or value < 3:
                raise ValidationError(f"The dimension k must be an integer of at least 3, got {value}", "k")
        if data.get("command") == "tables" and data.get("which") in ["table1", "figure1", "rational"] and k is None:
            raise ValidationError(f'Table "{data["which"]}" needs a value for k', "k")

    @validates_schema
    def validate_only(self, data, **kwargs):
        only = data.get("only")
        if only is None:
            return
        for check_id in splitlist(only):
            if check_id not in check_ids and check_id not in optional_check_ids:
                raise ValidationError(
                    f'Unknown check "{check_id}", expected one of {formatlist(check_ids + optional_check_ids)}', "only"
                )

    @post_load
    def normalize(self, data, **kwargs):
        if "pred" in data:
            data["pred"] = graph_predicates[data["pred"]]
        if data.get("only") is not None:
            data["only"] = splitlist(data["only"])
        return data


def load_config(opts):
    """
    dict of validated options, raises ValidationError
    """
    values = {key: value for key, value in vars(opts).items() if value is not None}
    return RunConfigSchema().load(values)

# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from marshmallow import fields, validate, Schema, RAISE

from .fact import validate_group_text

annotations = ["computed", "configured", "finite", "unknown"]


class EntrySchema(Schema):
    class Meta:
        unknown = RAISE

    x = fields.Int(required=True)
    y = fields.Int(required=True)
    group = fields.Str(required=True, validate=validate_group_text)
    annotation = fields.Str(required=True, validate=validate.OneOf(annotations))


class SSTableSchema(Schema):
    class Meta:
        unknown = RAISE

    name = fields.Str(allow_none=True)
    coordinates = fields.List(fields.Str(), required=True, validate=validate.Length(equal=2))
    entries = fields.List(fields.Nested(EntrySchema), required=True)


class GradedEntrySchema(Schema):
    class Meta:
        unknown = RAISE

    degree = fields.Int(required=True)
    group = fields.Str(required=True, validate=validate_group_text)
    annotation = fields.Str(required=True, validate=validate.OneOf(annotations))


class KnotCohomologyTableSchema(Schema):
    class Meta:
        unknown = RAISE

    k = fields.Int(required=True, validate=validate.Range(min=3))
    mode = fields.Str(required=True, validate=validate.OneOf(["pinned", "computed"]))
    t_max = fields.Int(required=True)
    entries = fields.List(fields.Nested(GradedEntrySchema), required=True)
    consumed_facts = fields.List(fields.Str(), required=True)
    missing_facts = fields.List(fields.Str(), required=True)

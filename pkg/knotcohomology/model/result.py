# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from marshmallow import fields, Schema, RAISE


class CheckResultSchema(Schema):
    class Meta:
        unknown = RAISE

    id = fields.Str(required=True)
    passed = fields.Bool(required=True)
    description = fields.Str(required=True)
    failures = fields.List(fields.Str(), missing=list)


class ErrorSchema(Schema):
    class Meta:
        unknown = RAISE

    type = fields.Str(required=True)
    message = fields.Str(required=True)


class ErrorDocumentSchema(Schema):
    error = fields.Nested(ErrorSchema, required=True)

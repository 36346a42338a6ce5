# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

"""
schemas for groups, graded groups and integer chain complexes
"""

from marshmallow import fields, validate, Schema, post_load, RAISE, validates_schema, ValidationError

from ..linalg import AbelianGroup, IntegerChainComplex, SparseIntMatrix
from ..errors import KnotCohomologyError


class AbelianGroupSchema(Schema):
    class Meta:
        unknown = RAISE

    rank = fields.Int(attribute="free_rank", required=True, validate=validate.Range(min=0))
    torsion = fields.List(fields.Int(validate=validate.Range(min=2)), required=True)

    @post_load
    def make_object(self, data, **kwargs):
        return AbelianGroup(data["free_rank"], data["torsion"])


class GradedGroupField(fields.Field):
    """
    map degree -> group, dumped with string keys
    """

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        schema = AbelianGroupSchema()
        return {str(d): schema.dump(g) for d, g in sorted(value.items())}

    def _deserialize(self, value, attr, data, **kwargs):
        if not isinstance(value, dict):
            raise ValidationError("Expected a mapping from degrees to groups")
        schema = AbelianGroupSchema()
        try:
            return {int(d): schema.load(g) for d, g in value.items()}
        except ValueError as e:
            raise ValidationError(f"Invalid degree: {e}")


class ChainComplexSchema(Schema):
    class Meta:
        unknown = RAISE

    name = fields.Str(allow_none=True)
    degrees = fields.List(fields.Int(), required=True, validate=validate.Length(equal=2))
    ranks = fields.Dict(keys=fields.Str(), values=fields.Int(validate=validate.Range(min=0)), required=True)
    boundaries = fields.Method("dump_boundaries", deserialize="load_boundaries", required=True)

    def dump_boundaries(self, obj):
        return {str(d): [list(t) for t in m.triples()] for d, m in sorted(obj.boundaries.items())}

    def load_boundaries(self, value):
        if not isinstance(value, dict):
            raise ValidationError("Expected a mapping from degrees to triples")
        result = dict()
        for d, triples in value.items():
            if any(len(t) != 3 for t in triples):
                raise ValidationError(f"Boundary in degree {d} needs [row, column, value] triples")
            result[int(d)] = [tuple(int(v) for v in t) for t in triples]
        return result

    @validates_schema
    def validate_degrees(self, data, **kwargs):
        if "degrees" not in data or "ranks" not in data:
            return  # validation error will be raised independently
        lo, hi = data["degrees"]
        if lo > hi:
            raise ValidationError(f"Invalid degree range [{lo}, {hi}]")
        for d in data["ranks"]:
            if not (lo <= int(d) <= hi):
                raise ValidationError(f"Rank given for degree {d} outside of [{lo}, {hi}]")

    @post_load
    def make_object(self, data, **kwargs):
        lo, hi = data["degrees"]
        ranks = {int(d): r for d, r in data["ranks"].items()}
        try:
            boundaries = {
                d: SparseIntMatrix.from_triples(ranks.get(d - 1, 0), ranks.get(d, 0), triples)
                for d, triples in data["boundaries"].items()
            }
            return IntegerChainComplex((lo, hi), ranks, boundaries, name=data.get("name"))
        except KnotCohomologyError as e:
            raise ValidationError(str(e))

# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

"""
geometric facts are statements about the spectral sequences that are not
computed here, each with the location and quote it was taken from
"""

from marshmallow import fields, validate, Schema, post_load, post_dump, RAISE, validates_schema, ValidationError
from marshmallow_oneofschema import OneOfSchema

from ..linalg import AbelianGroup
from ..errors import InvalidInputError

fact_kinds = [
    "aux-d1-iso",
    "aux-d1-free-to-infinite",
    "homology-values",
    "main-infinite",
    "main-entry",
    "column-bounds",
]


def validate_group_text(text):
    """
    groups with an optional unknown summand, "Z⊕Z_2", "Z⊕?", "T"
    """
    tokens = text.replace(" ", "").replace("+", "⊕").split("⊕")
    known = [t for t in tokens if t not in ("T", "?")]
    try:
        AbelianGroup.parse("⊕".join(known))
    except InvalidInputError as e:
        raise ValidationError(str(e))


class GeometricFact:
    def __init__(self, **kwargs):
        assert "id" in kwargs
        assert "kind" in kwargs
        for k, v in kwargs.items():
            setattr(self, k, v)

    def __hash__(self):
        return hash(self.id)  # id is unique

    def __repr__(self):
        return f'GeometricFact("{self.id}", {self.kind})'


class DifferentialDataSchema(Schema):
    class Meta:
        unknown = RAISE

    page = fields.Int(missing=1, validate=validate.Range(min=1))
    source = fields.List(fields.Int(), required=True, validate=validate.Length(equal=2))
    target = fields.List(fields.Int(), required=True, validate=validate.Length(equal=2))
    note = fields.Str()


class HomologyValuesDataSchema(Schema):
    class Meta:
        unknown = RAISE

    block = fields.Str(required=True)
    values = fields.Dict(keys=fields.Str(), values=fields.Str(validate=validate_group_text), required=True)
    degree_origin = fields.Int()  # degrees are relative to rho times this value
    complete = fields.Bool(missing=True)

    @validates_schema
    def validate_degrees(self, data, **kwargs):
        for d in data.get("values", dict()):
            try:
                int(d)
            except ValueError:
                raise ValidationError(f'Invalid degree "{d}"')


class LinearDegreeSchema(Schema):
    """
    the degree k * coefficient + const, for the dimension k of the target
    """

    class Meta:
        unknown = RAISE

    k = fields.Int(required=True)
    const = fields.Int(required=True)


class MainInfiniteDataSchema(Schema):
    class Meta:
        unknown = RAISE

    p = fields.Int(required=True, validate=validate.Range(max=-1))
    q = fields.Nested(LinearDegreeSchema, required=True)
    group = fields.Str(required=True, validate=validate_group_text)
    rational_rank = fields.Int(validate=validate.Range(min=0))
    note = fields.Str()


class MainPageEntrySchema(Schema):
    class Meta:
        unknown = RAISE

    p = fields.Int(required=True, validate=validate.Range(max=-1))
    q = fields.Int(required=True)
    group = fields.Str(required=True, validate=validate_group_text)


class MainEntryDataSchema(Schema):
    class Meta:
        unknown = RAISE

    k = fields.Int(required=True, validate=validate.Range(min=3))
    entries = fields.List(fields.Nested(MainPageEntrySchema), required=True)

    @validates_schema
    def validate_entries(self, data, **kwargs):
        seen = set()
        for entry in data.get("entries", []):
            coordinate = (entry["p"], entry["q"])
            if coordinate in seen:
                raise ValidationError(f"Entry at {coordinate} is given twice", "entries")
            seen.add(coordinate)

            text = entry["group"].replace(" ", "")
            if not any(unknown in text for unknown in ("T", "?")) and AbelianGroup.parse(text).is_zero:
                raise ValidationError(f"Entry at {coordinate} is zero, zero entries are omitted", "entries")


class ColumnBoundsDataSchema(Schema):
    class Meta:
        unknown = RAISE

    from_rho = fields.Int(required=True, validate=validate.Range(min=2))


class BaseFactSchema(Schema):
    class Meta:
        unknown = RAISE

    id = fields.Str(required=True)
    rho = fields.Int(allow_none=True, missing=None, validate=validate.Range(min=1))
    kind = fields.Str(required=True, validate=validate.OneOf(fact_kinds))
    provenance = fields.Str(required=True)

    @post_load
    def make_object(self, data, **kwargs):
        return GeometricFact(**data)

    @post_dump(pass_many=False)
    def remove_none(self, data, many):
        return {key: value for key, value in data.items() if value is not None}


class AuxIsoFactSchema(BaseFactSchema):
    kind = fields.Str(default="aux-d1-iso", validate=validate.Equal("aux-d1-iso"))
    data = fields.Nested(DifferentialDataSchema, required=True)


class AuxFreeToInfiniteFactSchema(BaseFactSchema):
    kind = fields.Str(default="aux-d1-free-to-infinite", validate=validate.Equal("aux-d1-free-to-infinite"))
    data = fields.Nested(DifferentialDataSchema, required=True)


class HomologyValuesFactSchema(BaseFactSchema):
    kind = fields.Str(default="homology-values", validate=validate.Equal("homology-values"))
    data = fields.Nested(HomologyValuesDataSchema, required=True)


class MainInfiniteFactSchema(BaseFactSchema):
    kind = fields.Str(default="main-infinite", validate=validate.Equal("main-infinite"))
    data = fields.Nested(MainInfiniteDataSchema, required=True)


class MainEntryFactSchema(BaseFactSchema):
    kind = fields.Str(default="main-entry", validate=validate.Equal("main-entry"))
    data = fields.Nested(MainEntryDataSchema, required=True)


class ColumnBoundsFactSchema(BaseFactSchema):
    kind = fields.Str(default="column-bounds", validate=validate.Equal("column-bounds"))
    data = fields.Nested(ColumnBoundsDataSchema, required=True)


class GeometricFactSchema(OneOfSchema):
    type_field = "kind"
    type_field_remove = False
    type_schemas = {
        "aux-d1-iso": AuxIsoFactSchema,
        "aux-d1-free-to-infinite": AuxFreeToInfiniteFactSchema,
        "homology-values": HomologyValuesFactSchema,
        "main-infinite": MainInfiniteFactSchema,
        "main-entry": MainEntryFactSchema,
        "column-bounds": ColumnBoundsFactSchema,
    }

    def get_obj_type(self, obj):
        if isinstance(obj, GeometricFact):
            return obj.kind
        raise Exception("Cannot get obj type for GeometricFact")


class FactsFileSchema(Schema):
    class Meta:
        unknown = RAISE

    facts = fields.List(fields.Nested(GeometricFactSchema), required=True)

    @validates_schema
    def validate_ids(self, data, **kwargs):
        if "facts" not in data:
            return  # validation error will be raised independently
        ids = [fact.id for fact in data["facts"]]
        if len(ids) > len(set(ids)):
            raise ValidationError("Duplicate fact id")

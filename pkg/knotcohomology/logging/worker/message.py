# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import logging

from marshmallow import Schema, fields, validate, post_load
from marshmallow_oneofschema import OneOfSchema

command_types = [
    "enable_verbose",
    "enable_print",
    "disable_print",
    "teardown",
]


class Message:
    def __init__(self, **kwargs):
        for k, v in kwargs.items():
            setattr(self, k, v)

    def __repr__(self):
        return f"Message({self.type})"


class CommandMessageSchema(Schema):
    type = fields.Str(required=True, validate=validate.OneOf(command_types))

    @post_load
    def make_object(self, data, **kwargs):
        return Message(**data)


class LogMessageSchema(CommandMessageSchema):
    type = fields.Str(default="log", validate=validate.Equal("log"))

    levelno = fields.Int(default=logging.DEBUG)

    msg = fields.Str(required=True)

    worker = fields.Str(allow_none=True, missing=None)


class SetOutdirMessageSchema(CommandMessageSchema):
    type = fields.Str(default="set_outdir", validate=validate.Equal("set_outdir"))

    outdir = fields.Str(required=True)


class MessageSchema(OneOfSchema):
    type_field = "type"
    type_field_remove = False
    type_schemas = {
        "log": LogMessageSchema,
        "set_outdir": SetOutdirMessageSchema,
        **{command_type: CommandMessageSchema for command_type in command_types},
    }

    def get_obj_type(self, obj):
        if isinstance(obj, Message):
            return obj.type
        elif isinstance(obj, dict):
            return obj.get("type")

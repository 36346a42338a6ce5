# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from .group import AbelianGroupSchema, ChainComplexSchema, GradedGroupField
from .fact import (
    GeometricFact,
    GeometricFactSchema,
    FactsFileSchema,
    fact_kinds,
    validate_group_text,
)
from .table import EntrySchema, SSTableSchema, GradedEntrySchema, KnotCohomologyTableSchema
from .result import CheckResultSchema, ErrorDocumentSchema

__all__ = [
    AbelianGroupSchema, ChainComplexSchema, GradedGroupField,
    GeometricFact, GeometricFactSchema, FactsFileSchema, fact_kinds, validate_group_text,
    EntrySchema, SSTableSchema, GradedEntrySchema, KnotCohomologyTableSchema,
    CheckResultSchema, ErrorDocumentSchema,
]

# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from .base import SnRepresentation, validate, adjacent_word, compose, transposition, as_matrix, identity
from .builtin import (
    trivial,
    sign,
    matching_rep_hat,
    matching_rep,
    tensor,
    get_representation,
    registry_names,
    matchings,
    matching_subscripts,
    matching_subscript,
    permute_matching,
    canonical_matching,
)
from .triple import exact_triple_check, restriction_check

__all__ = [
    SnRepresentation, validate, adjacent_word, compose, transposition, as_matrix, identity,
    trivial, sign, matching_rep_hat, matching_rep, tensor, get_representation, registry_names,
    matchings, matching_subscripts, matching_subscript, permute_matching, canonical_matching,
    exact_triple_check, restriction_check,
]

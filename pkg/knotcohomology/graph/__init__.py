# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from .simple import SimpleGraph, is_connected, is_two_connected, all_edges
from .complex import graph_complex, graph_generators
from .matching import (
    matching_basis,
    matching_chain,
    full_boundary,
    permute_chain,
    matching_coordinates,
    action_matrix,
    symmetry_action_on_homology,
    transposition_fixes_its_matching,
    coxeter_check,
)

__all__ = [
    SimpleGraph, is_connected, is_two_connected, all_edges,
    graph_complex, graph_generators,
    matching_basis, matching_chain, full_boundary, permute_chain, matching_coordinates,
    action_matrix, symmetry_action_on_homology, transposition_fixes_its_matching, coxeter_check,
]

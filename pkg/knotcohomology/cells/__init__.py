# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from .nested import NestedCell, LabeledCell, nested_cells, fuks_cells, compositions
from .boundary import BoundaryTerm, boundary_terms, fuks_boundary, orientation_constant
from .homology import (
    check_supported,
    config_complex,
    config_homology,
    covering_complex,
    coefficient_complexes,
    coefficient_chain_maps,
    projective_space_complex,
    circle_model_oracle,
    sign_coefficients_lemma,
)
from .published import (
    published_formulas,
    published_covering_differentials,
    compare_published_differentials,
    parse_chain,
    expand_name,
    Mismatch,
)
from .generating import GeneratingCycle, generating_cycles, check_generating_cycles

__all__ = [
    NestedCell, LabeledCell, nested_cells, fuks_cells, compositions,
    BoundaryTerm, boundary_terms, fuks_boundary, orientation_constant,
    check_supported, config_complex, config_homology, covering_complex,
    coefficient_complexes, coefficient_chain_maps, projective_space_complex,
    circle_model_oracle, sign_coefficients_lemma,
    published_formulas, published_covering_differentials, compare_published_differentials,
    parse_chain, expand_name, Mismatch,
    GeneratingCycle, generating_cycles, check_generating_cycles,
]

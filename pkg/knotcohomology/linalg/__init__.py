# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from .matrix import SparseIntMatrix, block_diagonal
from .group import AbelianGroup, direct_sum as group_direct_sum, hom_is_zero, ext_is_zero
from .snf import smith_invariants, smith_diagonal, smith_decomposition, determinantal_invariants, rank
from .complex import (
    IntegerChainComplex,
    verify_complex,
    check_complex,
    homology,
    euler_characteristic,
    euler_check,
    direct_sum,
    graded_direct_sum,
    nonzero,
)
from .pairseq import pair_sequence_solve, PairSequenceSolution, Ambiguity
from .cycles import (
    ChainMap,
    is_cycle,
    class_order,
    generates_homology,
    induced_rational_rank,
    map_on_homology_is_injective,
    coefficient_sequence_check,
)

__all__ = [
    SparseIntMatrix, block_diagonal,
    AbelianGroup, group_direct_sum, hom_is_zero, ext_is_zero,
    smith_invariants, smith_diagonal, smith_decomposition, determinantal_invariants, rank,
    IntegerChainComplex, verify_complex, check_complex, homology,
    euler_characteristic, euler_check, direct_sum, graded_direct_sum, nonzero,
    pair_sequence_solve, PairSequenceSolution, Ambiguity,
    ChainMap, is_cycle, class_order, generates_homology, induced_rational_rank,
    map_on_homology_is_injective, coefficient_sequence_check,
]

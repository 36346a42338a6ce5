# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from .symbols import (
    SymbolA,
    complexity,
    defect,
    symbols_for,
    block_fiber,
    block_top_degree,
    finiteness_list,
)
from .formulas import D_of_s, stable_degree_bound, divideontimes_dim, elementary_bound
from .entry import Entry, SSTable
from .engine import Differential, Degeneration, degenerate, extend, total_degrees, hom_forced_zero
from .facts import FactRegistry, load_facts, empty_facts, dump_facts
from .main import (
    q_of,
    degree_of,
    q_symbolic,
    degree_symbolic,
    main_column,
    bounds_column,
    wedge_ok,
    stable_range,
    stable_dimension,
    pro99_bound,
    column_bounds,
    first_total,
    check_wedge,
    symbolic_column,
)
from .inverse import aux_E1, aux_inputs, collapse_aux, aux_bounds, check_aux_against_bounds, Collapse
from .assemble import (
    assemble,
    main_page,
    compare_pages,
    rational_summary,
    default_t_max,
    rational_bound,
    base_homology,
    Assembly,
    Discrepancy,
    KnotCohomologyTable,
    RationalRank,
    modes,
)

__all__ = [
    SymbolA, complexity, defect, symbols_for, block_fiber, block_top_degree, finiteness_list,
    D_of_s, stable_degree_bound, divideontimes_dim, elementary_bound,
    Entry, SSTable,
    Differential, Degeneration, degenerate, extend, total_degrees, hom_forced_zero,
    FactRegistry, load_facts, empty_facts, dump_facts,
    q_of, degree_of, q_symbolic, degree_symbolic, main_column, bounds_column, wedge_ok,
    stable_range, stable_dimension, pro99_bound, column_bounds, first_total, check_wedge, symbolic_column,
    aux_E1, aux_inputs, collapse_aux, aux_bounds, check_aux_against_bounds, Collapse,
    assemble, main_page, compare_pages, rational_summary, default_t_max, rational_bound,
    base_homology, Assembly, Discrepancy, KnotCohomologyTable, RationalRank, modes,
]

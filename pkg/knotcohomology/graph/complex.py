# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

"""
complexes of graphs on a labeled vertices, a graph with e edges is a face
of dimension e - 1 of the simplex spanned by the edges of the complete graph
"""

import logging
from itertools import combinations

from .simple import SimpleGraph, all_edges, predicates
from ..linalg import IntegerChainComplex, SparseIntMatrix
from ..errors import InvalidInputError

logger = logging.getLogger("knotcohomology.graph")

max_vertex_count = 7
large_vertex_count = 6


def graph_generators(a, predicate):
    """
    graphs satisfying the predicate, keyed by face dimension and listed
    in lexicographic order of their edge lists
    """
    if predicate not in predicates:
        raise InvalidInputError(f'Unknown graph predicate "{predicate}"')
    test = predicates[predicate]

    edges = all_edges(a)
    generators = {d: list() for d in range(len(edges))}
    for e in range(1, len(edges) + 1):
        for subset in combinations(edges, e):
            g = SimpleGraph(a, subset)
            if test(g):
                generators[e - 1].append(g)
    return generators


def graph_complex(a, predicate, allow_large=False):
    """
    quotient of the simplicial chain complex of the simplex spanned by all
    edges of the complete graph on a vertices by the faces whose graphs
    fail the predicate
    """
    a = int(a)
    if not (2 <= a <= max_vertex_count):
        raise InvalidInputError(f"Vertex count must be between 2 and {max_vertex_count}, got {a}")
    if a >= large_vertex_count and not allow_large:
        raise InvalidInputError(f"Vertex count {a} needs the opt-in for large graph complexes")

    generators = graph_generators(a, predicate)
    top = len(all_edges(a)) - 1

    index = {d: {g: i for i, g in enumerate(graphs)} for d, graphs in generators.items()}

    boundaries = dict()
    for d in range(1, top + 1):
        triples = []
        for col, g in enumerate(generators[d]):
            for t in range(len(g.edges)):
                face = g.without_edge(t)
                row = index[d - 1].get(face)
                if row is not None:
                    triples.append((row, col, (-1) ** t))
        boundaries[d] = SparseIntMatrix.from_triples(len(generators[d - 1]), len(generators[d]), triples)

    ranks = {d: len(graphs) for d, graphs in generators.items()}
    logger.debug(f"Graph complex a={a} {predicate} has ranks {ranks}")

    return IntegerChainComplex(
        (0, top),
        ranks,
        boundaries,
        labels={d: [g.name for g in graphs] for d, graphs in generators.items()},
        name=f"{predicate}({a})",
    )

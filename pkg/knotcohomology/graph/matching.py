# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

"""
the homology of the complex of two-connected graphs on four vertices, its
basis of matching chains and the action of S(4) on it
"""

import logging
from itertools import combinations

from sympy import Matrix

from .simple import SimpleGraph, all_edges
from .complex import graph_complex
from ..linalg import is_cycle
from ..rep import SnRepresentation, validate, matchings, matching_subscript, transposition, as_matrix
from ..errors import InvalidInputError

logger = logging.getLogger("knotcohomology.graph")

complete_graph = SimpleGraph(4, all_edges(4))


def _deletion_sign(g, edge):
    return (-1) ** g.edges.index(edge)


def _missing(*edges):
    return SimpleGraph(4, [e for e in complete_graph.edges if e not in edges])


def matching_chain(pairs):
    """
    the difference of the two complete graphs with one edge of the matching
    removed, signed so that both boundary terms cancel
    """
    e, f = sorted(tuple(sorted(pair)) for pair in pairs)
    g, h = _missing(e), _missing(f)
    return {g.name: _deletion_sign(g, f), h.name: -_deletion_sign(h, e)}


def matching_basis():
    """
    the chains indexed by the partner of vertex 1 in their matching, and
    the relation that their sum is the boundary of the complete graph
    """
    chains = {matching_subscript(pairs): matching_chain(pairs) for pairs in matchings}
    return chains, full_boundary()


def full_boundary():
    return {
        complete_graph.without_edge(t).name: (-1) ** t
        for t in range(len(complete_graph.edges))
    }


def _inversions(sequence):
    return sum(1 for i, j in combinations(range(len(sequence)), 2) if sequence[i] > sequence[j])


def permute_chain(perm, chain):
    """
    the simplicial action of a vertex permutation, the sign compares the
    image edge order with the lexicographic order
    """
    image = dict()
    for name, coefficient in chain.items():
        g = SimpleGraph.parse(4, name)
        edges = [tuple(sorted((perm[i - 1], perm[j - 1]))) for i, j in g.edges]
        target = SimpleGraph(4, edges).name
        image[target] = image.get(target, 0) + (-1) ** _inversions(edges) * coefficient
    return {name: c for name, c in image.items() if c != 0}


def matching_coordinates(chain, c=None):
    """
    coordinates of a cycle of degree four in the basis of the chains of
    the matchings with subscripts 2 and 3, modulo the boundary of the
    complete graph
    """
    if c is None:
        c = graph_complex(4, "two_connected")
    if not is_cycle(c, 4, chain):
        raise InvalidInputError("Chain is not a cycle of the complex of two-connected graphs")

    chains, relation = matching_basis()
    labels = c.basis_labels(4)

    def column(ch):
        return [ch.get(label, 0) for label in labels]

    system = Matrix([column(chains[2]), column(chains[3]), column(relation)]).T
    rhs = Matrix(column(chain))

    solution, params = system.gauss_jordan_solve(rhs)
    if len(params) > 0:
        raise InvalidInputError("Matching chains are not independent")
    x, y, _ = solution
    if not (x.is_integer and y.is_integer):
        raise InvalidInputError(f"Cycle has non-integral coordinates ({x}, {y})")

    return int(x), int(y)


def action_matrix(perm, c=None):
    if c is None:
        c = graph_complex(4, "two_connected")
    chains, _ = matching_basis()
    columns = [matching_coordinates(permute_chain(perm, chains[s]), c) for s in (2, 3)]
    return as_matrix([[columns[j][i] for j in range(2)] for i in range(2)])


def symmetry_action_on_homology():
    """
    matrices of all transpositions of S(4) on the fourth homology of the
    complex of two-connected graphs, in the basis of the matching chains
    """
    c = graph_complex(4, "two_connected")
    result = dict()
    for x, y in combinations(range(1, 5), 2):
        result[x, y] = action_matrix(transposition(4, x, y), c)
        logger.debug(f"Transposition ({x} {y}) acts by {result[x, y].tolist()}")
    return result


def transposition_fixes_its_matching(x, y):
    """
    the transposition (x y) preserves the chain of the matching containing
    the edge xy and exchanges the other two chains
    """
    perm = transposition(4, x, y)
    chains, _ = matching_basis()

    fixed = [s for s, ch in chains.items() if permute_chain(perm, ch) == ch]
    if len(fixed) != 1:
        return False
    (s,) = fixed
    pairs = next(p for p in matchings if matching_subscript(p) == s)
    if (x, y) not in pairs:
        return False

    a, b = [t for t in chains if t != s]
    return permute_chain(perm, chains[a]) == chains[b] and permute_chain(perm, chains[b]) == chains[a]


def coxeter_check(matrices):
    """
    violated Coxeter relations among images of the adjacent transpositions
    """
    return validate(SnRepresentation(len(matrices) + 1, matrices))

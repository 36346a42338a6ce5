# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

"""
cellular chains of the one point compactification of B(R^k, n), one cell
per nested structure of the points and one basis element per cell and
basis vector of the local system
"""

import logging
from functools import lru_cache


from .nested import LabeledCell, nested_cells, max_plane_points, max_space_points
from .boundary import boundary_terms, fuks_boundary
from ..linalg import IntegerChainComplex, SparseIntMatrix, ChainMap, AbelianGroup, homology, block_diagonal
from ..rep import sign, trivial, matching_rep, matching_rep_hat, matchings, matching_subscript, permute_matching
from ..rep.builtin import matching_quotient
from ..errors import InvalidInputError

logger = logging.getLogger("knotcohomology.cells")


def check_supported(k, n):
    k, n = int(k), int(n)
    if k == 2 and 2 <= n <= max_plane_points:
        return
    if k >= 3 and 2 <= n <= max_space_points:
        return
    raise InvalidInputError(f"Configuration space of {n} points in R^{k} is not supported")


def _cells_by_dimension(k, n):
    result = dict()
    for cell in nested_cells(k, n):
        result.setdefault(cell.dimension, list()).append(cell)
    return result


def _basis_label(cell, b, dim):
    if dim == 1:
        return cell.name
    return f"{cell.name}#{b + 1}"


def config_complex(k, n, rep):
    """
    cellular chain complex of the one point compactification of B(R^k, n)
    relative to the point at infinity, with the local system of rep
    """
    check_supported(k, n)
    if rep.n != n:
        raise InvalidInputError(f"Representation of S({rep.n}) does not match {n} points")

    cells = _cells_by_dimension(k, n)
    lo, hi = min(cells), max(cells)
    dim = rep.dim

    index = {cell: i for graded in cells.values() for i, cell in enumerate(graded)}

    boundaries = dict()
    for d in range(lo + 1, hi + 1):
        triples = []
        for col, cell in enumerate(cells[d]):
            for face, matrix in fuks_boundary(cell, rep).items():
                row = index[face]
                for r in range(dim):
                    for c in range(dim):
                        if matrix[r, c] != 0:
                            triples.append((row * dim + r, col * dim + c, int(matrix[r, c])))
        boundaries[d] = SparseIntMatrix.from_triples(len(cells[d - 1]) * dim, len(cells[d]) * dim, triples)

    name = f"B(R^{k},{n};{rep.name})" if rep.name is not None else f"B(R^{k},{n})"
    logger.debug(f"Cell complex {name} with {sum(len(c) for c in cells.values())} cells of fiber dimension {dim}")

    return IntegerChainComplex(
        (lo, hi),
        {d: len(graded) * dim for d, graded in cells.items()},
        boundaries,
        labels={d: [_basis_label(cell, b, dim) for cell in graded for b in range(dim)] for d, graded in cells.items()},
        name=name,
    )


def config_homology(k, n, rep):
    """
    Borel-Moore homology of B(R^k, n) with coefficients in the local system
    """
    return homology(config_complex(k, n, rep))


def covering_complex(n=4):
    """
    complex of the three-sheeted covering of B(C, 4) whose points are
    configurations together with a matching of the points, with constant
    integer coefficients, the sheet over a cell is named by the partner of
    the first point
    """
    if n != 4:
        raise InvalidInputError(f"Matching covering is defined for four points only, got {n}")

    cells = _cells_by_dimension(2, 4)
    lo, hi = min(cells), max(cells)

    generators = {
        d: [LabeledCell(cell, matching_subscript(pairs)) for cell in graded for pairs in matchings]
        for d, graded in cells.items()
    }
    index = {g: i for graded in generators.values() for i, g in enumerate(graded)}
    pairs_of = {matching_subscript(pairs): pairs for pairs in matchings}

    boundaries = dict()
    for d in range(lo + 1, hi + 1):
        triples = []
        for col, g in enumerate(generators[d]):
            for term in boundary_terms(g.base):
                image = permute_matching(term.permutation, pairs_of[g.label])
                target = LabeledCell(term.face, matching_subscript(image))
                triples.append((index[target], col, term.sign))
        boundaries[d] = SparseIntMatrix.from_triples(len(generators[d - 1]), len(generators[d]), triples)

    return IntegerChainComplex(
        (lo, hi),
        {d: len(graded) for d, graded in generators.items()},
        boundaries,
        labels={d: [g.name for g in graded] for d, graded in generators.items()},
        name="B(C,4) matching cover",
    )


@lru_cache(maxsize=None)
def coefficient_complexes():
    """
    complexes of B(C, 4) with coefficients Z, A2hat and A2
    """
    return (
        config_complex(2, 4, trivial(4)),
        config_complex(2, 4, matching_rep_hat()),
        config_complex(2, 4, matching_rep()),
    )


def coefficient_chain_maps():
    """
    chain maps induced by the diagonal Z -> A2hat and the quotient A2hat -> A2
    """
    unit, hat, quotient = coefficient_complexes()

    diagonal = SparseIntMatrix.from_dense([[1], [1], [1]])
    projection = SparseIntMatrix.from_dense(matching_quotient.tolist())

    def blocks(block, count):
        return block_diagonal(*([block] * count))

    inclusion = ChainMap(unit, hat, {d: blocks(diagonal, unit.rank_at(d)) for d in unit.range()})
    quotient_map = ChainMap(hat, quotient, {d: blocks(projection, unit.rank_at(d)) for d in hat.range()})
    return inclusion, quotient_map


def projective_space_complex(dim, twisted, shift=0):
    """
    cellular complex of RP^dim with one cell in each dimension, with the
    orientation double cover as local system if twisted
    """
    t = -1 if twisted else 1
    boundaries = dict()
    for i in range(1, dim + 1):
        coefficient = t - 1 if i % 2 == 1 else t + 1
        boundaries[i] = SparseIntMatrix.from_dense([[coefficient]])
    c = IntegerChainComplex((0, dim), {i: 1 for i in range(dim + 1)}, boundaries, name=f"RP^{dim}")
    return c.shifted(shift)


def circle_model_oracle(k=4, twisted=True):
    """
    independent model of B(R^k, 2), which is R^k x (0, inf) x RP^(k-1) by
    the center of mass, the distance and the direction of the two points
    """
    k = int(k)
    if k < 2:
        raise InvalidInputError(f"Coordinate depth must be at least 2, got {k}")
    return projective_space_complex(k - 1, twisted, shift=k + 1)


def sign_coefficients_lemma(rho):
    """
    violations of: the homology of B(R^4, rho) with sign coefficients is
    finite, vanishes in degree 4 rho and is Z_2 in degree 4 rho - 1
    """
    rho = int(rho)
    if not (2 <= rho <= max_space_points):
        raise InvalidInputError(f"Sign lemma is checked for 2 <= rho <= {max_space_points}, got {rho}")

    groups = config_homology(4, rho, sign(rho))

    violations = [f"degree {d} has infinite homology {g}" for d, g in groups.items() if not g.is_finite]
    top = groups.get(4 * rho, AbelianGroup())
    if not top.is_zero:
        violations.append(f"degree {4 * rho} is {top}")
    below = groups.get(4 * rho - 1, AbelianGroup())
    if below != AbelianGroup.cyclic(2):
        violations.append(f"degree {4 * rho - 1} is {below}")
    return violations

# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

"""
first pages of the inverse spectral sequences that compute the Borel-Moore
homology of Lambda_rho minus Lambda_(rho - 1) for rho = 2, 3

column j holds the homology of the term Theta_j minus Theta_(j - 1) of the
inverse filtration, entry (j, q) sits in total degree j + q. The terms are
bundles of open simplices over configuration spaces, so each column is the
homology of a configuration space shifted by the simplex dimension:

    rho = 2, j = 0:  B(R^4, 2) with sign coefficients, shift 1
    rho = 2, j = 1:  B(C, 3) with sign coefficients, shift 2
    rho = 3, j = 0:  B(R^4, 3) minus its part B(C, 3), sign coefficients, shift 2
    rho = 3, j = 1:  B(C, 3) x R^4 minus the triangle block, shift 3
    rho = 3, j = 2:  B(C, 4) with coefficients in A2, shift 4
"""

import logging
from functools import lru_cache

from .entry import Entry, SSTable
from .engine import degenerate, total_degrees
from .facts import load_facts
from .main import pro99_bound
from ..cells import config_homology
from ..linalg import AbelianGroup, pair_sequence_solve, nonzero
from ..rep import get_representation
from ..errors import InvalidInputError, MissingInputError, InconsistentSequenceError, AmbiguityError

logger = logging.getLogger("knotcohomology.spectral")

aux_ranks = [2, 3]

aux_direction = (-1, 1)

block_names = {
    0: "theta_0",
    1: "theta_1 - theta_0",
    2: "theta_2 - theta_1",
}


@lru_cache(maxsize=None)
def _homology(k, n, name):
    return nonzero(config_homology(k, n, get_representation(name, n)))


def _shifted(groups, shift):
    return {d + shift: g for d, g in groups.items()}


def _check_sign_lemma(groups, rho, facts):
    values = facts.homology_values("sign-configurations", rho)
    if values is None:
        return
    for d, expected in values.items():
        found = Entry(groups.get(d, AbelianGroup()))
        if found != expected:
            raise InconsistentSequenceError(
                f"Sign homology of B(R^4, {rho}) is {found} in degree {d}, the configured value is {expected}",
                degree=d,
            )


def _complement(h_closed, h_total, block):
    solution = pair_sequence_solve(h_closed, h_total)
    if not solution.resolved:
        ambiguity = solution.ambiguities[0]
        raise AmbiguityError(
            f"Homology of {block} is not determined: {ambiguity.message}", coordinates=[ambiguity.degree]
        )
    return solution.nonzero()


def aux_inputs(rho, facts):
    """
    column j -> (Borel-Moore homology of the base, simplex dimension, annotation)
    """
    if rho == 2:
        base = _homology(4, 2, "sign")
        _check_sign_lemma(base, 2, facts)
        return {
            0: (base, 1, "computed"),
            1: (_homology(2, 3, "sign"), 2, "computed"),
        }

    elif rho == 3:
        total = _homology(4, 3, "sign")
        _check_sign_lemma(total, 3, facts)
        theta0 = _complement(_homology(2, 3, "sign"), total, block_names[0])

        triangle = facts.homology_values("triangle", 3)
        if triangle is None:
            raise MissingInputError(
                f"Homology of the triangle block is needed for {block_names[1]} at rho=3",
                block=block_names[1],
            )
        if not all(entry.is_known for entry in triangle.values()):
            raise InvalidInputError("Homology of the triangle block must be given as groups")
        triangle = {d: entry.group for d, entry in triangle.items()}

        product = _shifted(_homology(2, 3, "sign"), 4)  # Kunneth with the cell X = R^4
        theta1 = _complement(triangle, product, block_names[1])

        return {
            0: (theta0, 2, "computed"),
            1: (theta1, 3, "configured"),
            2: (_homology(2, 4, "A2"), 4, "computed"),
        }

    raise InvalidInputError(f"Auxiliary pages are available for rho in {aux_ranks}, got {rho}")


def aux_E1(rho, facts=None):
    """
    page one of the inverse spectral sequence over (j, q)
    """
    if facts is None:
        facts = load_facts()

    table = SSTable(("j", "q"), name=f"aux E1 rho={rho}", rho=rho)
    for j, (groups, shift, annotation) in aux_inputs(rho, facts).items():
        for m, group in groups.items():
            total = m + shift
            table[j, total - j] = Entry(group, annotation=annotation)

    logger.debug(f"{table!r}: {', '.join(f'{c}: {e}' for c, e in table.items())}")

    return table


class Collapse:
    def __init__(self, rho, groups, degeneration, ambiguities, facts):
        self.rho = rho
        self.groups = groups
        self.degeneration = degeneration
        self.ambiguities = ambiguities
        self.facts = facts

    @property
    def page(self):
        return self.degeneration.table

    def __repr__(self):
        groups = ", ".join(f"{d}: {e}" for d, e in sorted(self.groups.items(), reverse=True))
        return f"Collapse(rho={self.rho}, {{{groups}}})"


def collapse_aux(table, facts=None, strict=True):
    """
    Borel-Moore homology of Lambda_rho minus Lambda_(rho - 1) from page one

    differentials d_r go from (j, q) to (j - r, q + r - 1) and must be
    forced or declared by a fact, coprime extensions are merged
    """
    if facts is None:
        facts = load_facts()

    rho = table.rho
    differential_facts = facts.differential_facts(rho)

    degeneration = degenerate(table, aux_direction, differential_facts, strict=strict)

    used = set(degeneration.facts)
    for fact in facts:
        if fact.id in used:
            facts.consume(fact)
    declared = set(fact_id for _, fact_id in differential_facts.values())
    for fact_id in sorted(declared - used):
        logger.warning(f'Fact "{fact_id}" declares a differential that never occurs at rho={rho}')

    groups, ambiguities = total_degrees(degeneration.table, sub_first=lambda coordinate: coordinate[0])

    return Collapse(rho, groups, degeneration, degeneration.ambiguities + ambiguities, sorted(used))


def aux_bounds(rho, j):
    """
    (trivial above, Z_2 at, finite above) for the Borel-Moore homology of
    the term Theta_j minus Theta_(j - 1), None where nothing is asserted
    """
    if j == 0:
        return 5 * rho - 2, 5 * rho - 2, 5 * rho - 6
    elif j == 1:
        return 5 * rho - 3, None, 5 * rho - 6
    elif j == 2 and rho > 3:
        return 5 * rho - 4, None, (5 * rho - 6 if rho > 4 else None)
    return pro99_bound(rho, j), None, None


def check_aux_against_bounds(rho, facts=None):
    """
    violations of the general bounds by the computed columns and by the
    collapsed homology
    """
    if facts is None:
        facts = load_facts()

    table = aux_E1(rho, facts)

    violations = []
    for j in table.columns():
        trivial_above, z2_at, finite_above = aux_bounds(rho, j)
        column = {q + j: entry for q, entry in table.column(j).items()}

        for total, entry in column.items():
            if total > trivial_above:
                violations.append(f"column {j} is {entry} in degree {total} above {trivial_above}")
            if finite_above is not None and total > finite_above and not entry.is_finite:
                violations.append(f"column {j} is infinite {entry} in degree {total} above {finite_above}")

        if z2_at is not None and column.get(z2_at, Entry()) != Entry(AbelianGroup.cyclic(2)):
            violations.append(f"column {j} is {column.get(z2_at, Entry())} in degree {z2_at}, expected Z_2")

    collapse = collapse_aux(table, facts)
    top = 5 * rho - 2
    for degree, entry in collapse.groups.items():
        if degree > top and not entry.is_zero:
            violations.append(f"homology is {entry} in degree {degree} above {top}")
    if collapse.groups.get(top, Entry()) != Entry(AbelianGroup.cyclic(2)):
        violations.append(f"homology is {collapse.groups.get(top, Entry())} in degree {top}, expected Z_2")

    return violations

# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

"""
the stable cohomology of the space of knots in R^k from the main spectral
sequence

in the pinned mode the columns p = -1, -2, -3 are read from the published
page for k = 3, shifted by -2p(k - 3). In the computed mode they come from
the collapse of the auxiliary pages. Columns from p = -4 on are bounds
only in both modes
"""

import logging

from inflect import engine as inflect_engine

from .entry import Entry, SSTable, any_unknown, finite_unknown
from .engine import degenerate, total_degrees
from .facts import load_facts
from .inverse import aux_E1, collapse_aux, aux_ranks
from .main import (
    main_column,
    stable_dimension,
    unknown_column,
    bounds_column,
    first_total,
    degree_of,
    q_symbolic,
    degree_symbolic,
)
from ..linalg import AbelianGroup, IntegerChainComplex, homology, nonzero
from ..errors import InvalidInputError, MissingInputError, AmbiguityError

logger = logging.getLogger("knotcohomology.spectral")

p = inflect_engine()

modes = ["pinned", "computed"]

main_direction = (1, -1)

exact_ranks = [1] + aux_ranks


def default_t_max(k):
    """
    the range of degrees in which the published table is complete
    """
    if k == 3:
        return 4
    return 6 * k - 12


def rational_bound(k):
    return 8 * k - 17


def default_window(k, t_max):
    return max(t_max, rational_bound(k)) + 1


def default_rho_max(k, window):
    rho = 4
    while first_total(rho + 1, k) <= window:
        rho += 1
    return max(rho, 5)


def base_homology():
    """
    Lambda_1 is a bundle over the space X of unordered pairs of points of
    C, a single open cell of dimension 4
    """
    return nonzero(homology(IntegerChainComplex((4, 4), {4: 1}, name="X")))


class Discrepancy:
    def __init__(self, kind, column, message, computed=None, published=None, degrees=None):
        self.kind = kind
        self.column = column
        self.message = message
        self.computed = computed
        self.published = published
        self.degrees = degrees

    def __repr__(self):
        return f"Discrepancy({self.kind}, p={self.column})"

    def __str__(self):
        return self.message

    def to_dict(self):
        return dict(
            kind=self.kind,
            column=self.column,
            message=self.message,
            computed=self.computed,
            published=self.published,
            degrees=self.degrees,
        )


class KnotCohomologyTable:
    def __init__(self, k, mode, t_max, entries, consumed_facts=None, missing_facts=None):
        self.k = k
        self.mode = mode
        self.t_max = t_max
        self.entries = {i: entry for i, entry in sorted(entries.items()) if not entry.is_zero}
        self.consumed_facts = sorted(consumed_facts or [])
        self.missing_facts = sorted(missing_facts or [])

    def __getitem__(self, degree):
        return self.entries.get(degree, Entry())

    def __repr__(self):
        groups = ", ".join(f"{i}: {e}" for i, e in self.entries.items())
        return f"KnotCohomologyTable(k={self.k}, {self.mode}, {{{groups}}})"

    def nonzero(self):
        return dict(self.entries)

    def to_dict(self):
        return dict(
            k=self.k,
            mode=self.mode,
            t_max=self.t_max,
            entries=[dict(degree=i, **entry.to_dict()) for i, entry in self.entries.items()],
            consumed_facts=self.consumed_facts,
            missing_facts=self.missing_facts,
        )


class Assembly:
    def __init__(self, k, mode, page, degeneration, table, discrepancies, ambiguities, window, rho_max=None, dimension=None):
        self.k = k
        self.mode = mode
        self.page = page
        self.degeneration = degeneration
        self.table = table
        self.discrepancies = discrepancies
        self.ambiguities = ambiguities
        self.window = window
        self.rho_max = rho_max
        self.dimension = dimension

    def __iter__(self):
        return iter((self.page, self.table, self.discrepancies))

    def __repr__(self):
        return f"Assembly(k={self.k}, {self.mode}, {len(self.discrepancies)} discrepancies)"


def pinned_column(rho, k, facts):
    """
    the column p = -rho of the published page, or None
    """
    fact = facts.first("main-entry")
    if fact is None:
        return

    shift = 2 * rho * (k - fact.data["k"])
    column = SSTable(("p", "q"), name=f"column p={-rho}", rho=rho)
    for item in fact.data["entries"]:
        if item["p"] == -rho:
            column[item["p"], item["q"] + shift] = Entry.parse(item["group"], "configured")
    return column


def computed_column(rho, k, facts, ambiguities):
    if rho == 1:
        return main_column(1, k, base_homology())

    collapse = collapse_aux(aux_E1(rho, facts), facts, strict=False)
    ambiguities.extend(collapse.ambiguities)
    return main_column(rho, k, collapse.groups)


def infinite_entry(fact):
    """
    with a rational rank the unknown summand is finite, otherwise only the
    free rank of the group is a lower bound
    """
    entry = Entry.parse(fact.data["group"], "configured")

    rank = fact.data.get("rational_rank")
    if rank is None:
        return entry
    if rank < entry.group.free_rank:
        raise InvalidInputError(
            f"Fact \"{fact.id}\" gives rational rank {rank} below the free rank of {fact.data['group']}"
        )
    return Entry(AbelianGroup.free(rank), finite_unknown, "configured")


def main_page(k, facts, mode="pinned", window=None, rho_max=None):
    """
    page one of the main spectral sequence, with the names of the facts that
    were needed but not available
    """
    if mode not in modes:
        raise InvalidInputError(f'Unknown mode "{mode}", expected one of {modes}')
    if k < 3:
        raise InvalidInputError(f"Expected k >= 3, got {k}")

    if window is None:
        window = default_window(k, default_t_max(k))
    if rho_max is None:
        rho_max = default_rho_max(k, window)

    page = SSTable(("p", "q"), name=f"E1 k={k} {mode}")
    missing = []
    ambiguities = []

    for rho in exact_ranks:
        column = None
        if mode == "pinned":
            column = pinned_column(rho, k, facts)
            if column is None:
                missing.append("main-entry")
        else:
            try:
                column = computed_column(rho, k, facts, ambiguities)
            except (MissingInputError, AmbiguityError) as e:
                logger.warning(f"Column p={-rho} is unknown: {e}")
                missing.append(getattr(e, "block", None) or f"column p={-rho}")
        if column is None:
            column = unknown_column(rho, k, window)
        page.update(column)

    bounds = facts.first("column-bounds")
    if bounds is None:
        missing.append("column-bounds")

    for rho in range(max(exact_ranks) + 1, rho_max + 1):
        if bounds is None or rho < bounds.data["from_rho"]:
            page.update(unknown_column(rho, k, window))
            continue

        infinite = dict()
        for fact in facts.find("main-infinite", rho):
            if fact.data["p"] != -rho:
                continue
            facts.consume(fact)
            q = fact.data["q"]["k"] * k + fact.data["q"]["const"]
            infinite[q] = infinite_entry(fact)

        page.update(bounds_column(rho, k, window, infinite))

    return page, sorted(set(missing)), ambiguities


def compare_pages(computed, published, k):
    """
    differences between two pages that are not explained by unknown
    summands, an entry that moved within its column is one placement line
    """
    discrepancies = []

    for x in sorted(set(computed.columns()) | set(published.columns()), reverse=True):
        rho = -x
        a, b = computed.column(x), published.column(x)

        vanished, appeared, changed = [], [], []
        for q in sorted(set(a) | set(b)):
            ea, eb = a.get(q, Entry()), b.get(q, Entry())
            if ea.compatible(eb):
                continue
            if eb.is_zero:
                appeared.append(q)
            elif ea.is_zero:
                vanished.append(q)
            else:
                changed.append(q)

        for q_from in list(vanished):
            for q_to in list(appeared):
                if a[q_to] != b[q_from]:
                    continue
                m_from, m_to = degree_of(rho, q_from, k), degree_of(rho, q_to, k)
                message = (
                    f"column p={x}: {a[q_to]} at q={q_symbolic(rho, m_to)} (computed) "
                    f"against q={q_symbolic(rho, m_from)} (published), "
                    f"cohomology degree {degree_symbolic(rho, m_to)} against {degree_symbolic(rho, m_from)}"
                )
                discrepancies.append(Discrepancy(
                    "placement", x, message,
                    computed=dict(q=q_to, group=str(a[q_to]), symbolic=q_symbolic(rho, m_to)),
                    published=dict(q=q_from, group=str(b[q_from]), symbolic=q_symbolic(rho, m_from)),
                    degrees=[x + q_to, x + q_from],
                ))
                vanished.remove(q_from)
                appeared.remove(q_to)
                break

        for q in sorted(vanished + appeared + changed):
            ea, eb = a.get(q, Entry()), b.get(q, Entry())
            message = f"column p={x}, q={q}: {ea} (computed) against {eb} (published)"
            discrepancies.append(Discrepancy(
                "value", x, message,
                computed=dict(q=q, group=str(ea)),
                published=dict(q=q, group=str(eb)),
                degrees=[x + q],
            ))

    return discrepancies


def restrict_columns(page, columns):
    return SSTable(page.coordinates, {c: e for c, e in page.items() if c[0] in columns}, page.name)


def restrict_window(page, window, exact_rho):
    """
    drop the entries of the bound columns above total degree window
    """
    return SSTable(
        page.coordinates,
        {(x, y): e for (x, y), e in page.items() if -x <= exact_rho or x + y <= window},
        page.name,
    )


def assemble(k, facts=None, mode="pinned", t_max=None, rho_max=None):
    """
    page one, the cohomology table up to degree t_max and the discrepancies
    against the published page
    """
    if facts is None:
        facts = load_facts()
    facts = facts.fresh()

    if t_max is None:
        t_max = default_t_max(k)
    window = default_window(k, t_max)
    if rho_max is None:
        rho_max = default_rho_max(k, window)
    dimension = stable_dimension(rho_max, k)

    logger.info(f"Assembling the main spectral sequence for k={k} in {mode} mode through degree {t_max}")
    logger.info(f"Columns through p={-rho_max} are stable in dimension D >= {dimension}")

    page, missing, ambiguities = main_page(k, facts, mode, window, rho_max)

    degeneration = degenerate(page, main_direction, strict=False)
    totals, extension_ambiguities = total_degrees(degeneration.table, sub_first=lambda coordinate: -coordinate[0])

    entries = {i: entry for i, entry in totals.items() if i <= t_max}
    entries[0] = Entry(AbelianGroup.free(1))

    table = KnotCohomologyTable(k, mode, t_max, entries, facts.consumed, missing)

    discrepancies = []
    reference = facts.fresh()
    if mode == "pinned":
        fact = reference.first("main-entry")
        if fact is not None:
            columns = set(item["p"] for item in fact.data["entries"])
            published = SSTable(("p", "q"))
            for x in columns:
                published.update(pinned_column(-x, k, reference))
            published = restrict_window(published, window, max(exact_ranks))
            discrepancies = compare_pages(restrict_columns(page, columns), published, k)
    else:
        published, published_missing, _ = main_page(k, reference, "pinned", window, rho_max)
        if "main-entry" not in published_missing:
            discrepancies = compare_pages(page, published, k)

    for discrepancy in discrepancies:
        logger.warning(f"Discrepancy: {discrepancy}")

    all_ambiguities = ambiguities + degeneration.ambiguities + extension_ambiguities
    if len(all_ambiguities) > 0:
        logger.info(
            f"Found {p.no('ambiguity', len(all_ambiguities))} at k={k}, "
            f"entries are annotated with T or {any_unknown}"
        )

    return Assembly(k, mode, page, degeneration, table, discrepancies, all_ambiguities, window, rho_max, dimension)


class RationalRank:
    def __init__(self, degree, rank, exact):
        self.degree = degree
        self.rank = rank
        self.exact = exact

    def __eq__(self, other):
        if not isinstance(other, RationalRank):
            return NotImplemented
        return (self.degree, self.rank, self.exact) == (other.degree, other.rank, other.exact)

    def __repr__(self):
        return f"RationalRank({self.degree}, {self})"

    def __str__(self):
        if self.exact:
            return str(self.rank)
        return f">= {self.rank}"

    def to_dict(self):
        return dict(degree=self.degree, rank=self.rank, exact=self.exact)


def rational_summary(k, facts=None, mode="pinned"):
    """
    ranks of the rational cohomology through degree 8k - 17, a rank is a
    lower bound where an unknown summand is present
    """
    assembly = assemble(k, facts, mode, t_max=rational_bound(k))

    result = dict()
    for degree, entry in assembly.table.entries.items():
        exact = entry.unknown != any_unknown
        if entry.free_rank > 0 or not exact:
            result[degree] = RationalRank(degree, entry.free_rank, exact)
    return result

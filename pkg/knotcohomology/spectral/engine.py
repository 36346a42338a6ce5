# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

"""
degeneration of a spectral sequence page as far as it is forced

the differential d_r leaves (x, y) for (x + sx r, y + sy (r - 1)). A
differential is resolved when Hom between its ends vanishes, when a fact
declares it, or when one of its ends is finite, in which case only the
free ranks survive and the torsion becomes "T". Everything else is an
ambiguity, which is an error in strict mode and a "?" entry otherwise
"""

import logging

from .entry import Entry, finite_unknown, any_unknown
from ..linalg import AbelianGroup, hom_is_zero, ext_is_zero
from ..errors import AmbiguityError, InconsistentSequenceError

logger = logging.getLogger("knotcohomology.spectral")

differential_kinds = ["iso", "free-to-infinite", "to-finite", "from-finite", "ambiguous"]


class Differential:
    def __init__(self, page, source, target, kind, fact=None):
        self.page = page
        self.source = source
        self.target = target
        self.kind = kind
        self.fact = fact

    def __repr__(self):
        return f"Differential(d{self.page}: {self.source} -> {self.target}, {self.kind})"

    def to_dict(self):
        return dict(
            page=self.page,
            source=list(self.source),
            target=list(self.target),
            kind=self.kind,
            fact=self.fact,
        )


class Ambiguity:
    def __init__(self, kind, coordinates, message):
        self.kind = kind
        self.coordinates = coordinates
        self.message = message

    def __repr__(self):
        return f"Ambiguity({self.kind}, {self.coordinates})"

    def to_dict(self):
        return dict(kind=self.kind, coordinates=self.coordinates, message=self.message)


class Degeneration:
    """
    the last page together with the record of how it was reached
    """

    def __init__(self, table, differentials, ambiguities):
        self.table = table
        self.differentials = differentials
        self.ambiguities = ambiguities

    @property
    def facts(self):
        return sorted(set(d.fact for d in self.differentials if d.fact is not None))


def hom_forced_zero(source, target):
    if source.is_zero or target.is_zero:
        return True
    if any_unknown in (source.unknown, target.unknown):
        return False
    if source.free_rank > 0:
        return False
    if len(target.group.torsion) == 0 and target.unknown is None:
        return True  # finite into free
    if finite_unknown in (source.unknown, target.unknown):
        return False
    return hom_is_zero(source.group, target.group)


def _unknown_torsion(entry):
    if entry.unknown == any_unknown:
        return any_unknown
    if entry.has_torsion:
        return finite_unknown
    return None


def _derived(entry, result):
    if result == entry:
        return entry
    return Entry(result.group, result.unknown, Entry.default_annotation(result.unknown, entry.annotation))


def kernel_effect(kind, entry):
    if kind == "iso":
        return Entry()
    elif kind == "free-to-infinite":
        return Entry(AbelianGroup.free(entry.free_rank - 1), _unknown_torsion(entry))
    elif kind == "to-finite":
        return Entry(entry.group.free_part, _unknown_torsion(entry))
    elif kind == "from-finite":
        return Entry(unknown=finite_unknown)
    return Entry(unknown=any_unknown)


def cokernel_effect(kind, entry):
    if entry.is_zero or kind == "iso":
        return Entry()
    elif kind == "free-to-infinite":
        unknown = any_unknown if entry.unknown == any_unknown else finite_unknown
        return Entry(AbelianGroup.free(max(entry.free_rank - 1, 0)), unknown)
    elif kind == "to-finite":
        return Entry(unknown=finite_unknown)
    elif kind == "from-finite":
        unknown = any_unknown if entry.unknown == any_unknown else finite_unknown
        return Entry(entry.group.free_part, unknown)
    return Entry(unknown=any_unknown)


def _check_fact(kind, source, target, coordinates):
    if kind == "iso":
        if source.is_known and target.is_known and source.group != target.group:
            raise InconsistentSequenceError(
                f"Differential {coordinates} is declared an isomorphism "
                f"but {source} and {target} are not isomorphic"
            )
    elif kind == "free-to-infinite":
        if source.free_rank == 0 or target.is_finite:
            raise InconsistentSequenceError(
                f"Differential {coordinates} is declared to send a free generator "
                f"to an element of infinite order but maps {source} to {target}"
            )


def classify(source, target, fact_kind=None):
    """
    returns None for a differential that is forced to vanish
    """
    if hom_forced_zero(source, target):
        return None
    if fact_kind is not None:
        return fact_kind
    if target.is_finite:
        return "to-finite"
    if source.is_finite:
        return "from-finite"
    return "ambiguous"


def degenerate(table, direction, differential_facts=None, strict=True, max_page=None):
    """
    run all pages of the spectral sequence that starts at table

    differential_facts maps (page, source, target) to (kind, fact id)
    """
    if differential_facts is None:
        differential_facts = dict()

    sx, sy = direction
    current = table.copy()

    columns = current.columns()
    if max_page is None:
        max_page = columns[-1] - columns[0] if len(columns) > 0 else 0

    differentials = []
    ambiguities = []

    for r in range(1, max_page + 1):
        snapshot = current.copy()

        resolved = []
        for source in snapshot:
            x, y = source
            target = (x + sx * r, y + sy * (r - 1))

            fact_kind, fact_id = differential_facts.get((r, source, target), (None, None))

            if fact_kind is not None:
                _check_fact(fact_kind, snapshot[source], snapshot[target], (source, target))

            kind = classify(snapshot[source], snapshot[target], fact_kind)
            if kind is None:
                continue

            if kind == "ambiguous":
                message = (
                    f"Differential d{r}: {snapshot[source]} at {source} -> "
                    f"{snapshot[target]} at {target} is neither forced nor declared"
                )
                if strict:
                    raise AmbiguityError(message, coordinates=(source, target))
                logger.warning(message)
                ambiguities.append(Ambiguity("differential", [list(source), list(target)], message))

            differential = Differential(r, source, target, kind, fact_id)
            logger.debug(f"{differential!r}")
            differentials.append(differential)
            resolved.append(differential)

        for differential in resolved:
            entry = current[differential.source]
            current[differential.source] = _derived(entry, kernel_effect(differential.kind, entry))

        for differential in resolved:
            entry = current[differential.target]
            current[differential.target] = _derived(entry, cokernel_effect(differential.kind, entry))

    return Degeneration(current, differentials, ambiguities)


def extend(quotient, sub):
    """
    the middle term of 0 -> sub -> ? -> quotient -> 0, with a flag that is
    true when the extension was not forced to split
    """
    if sub.is_zero:
        return quotient, False
    if quotient.is_zero:
        return sub, False

    if quotient.is_known and len(quotient.group.torsion) == 0:
        return sub.direct_sum(quotient), False

    if quotient.is_known and sub.is_known:
        if ext_is_zero(quotient.group, sub.group):
            return sub.direct_sum(quotient), False
        return Entry(quotient.group.free_part + sub.group.free_part, finite_unknown), True

    return sub.direct_sum(quotient), False


def total_degrees(table, sub_first):
    """
    assemble the entries of equal total degree x + y into one group

    sub_first orders the filtration quotients of one total degree from the
    smallest filtration term upwards
    """
    totals = dict()
    ambiguities = []

    for n in table.total_degrees():
        pieces = sorted(table.at_total(n).items(), key=lambda item: sub_first(item[0]))

        accumulated = Entry()
        annotations = set()
        for coordinate, entry in pieces:
            accumulated, unresolved = extend(entry, accumulated)
            annotations.add(entry.annotation)
            if unresolved:
                message = f"Extension at total degree {n} through {coordinate} is not forced to split"
                logger.info(message)
                ambiguities.append(Ambiguity("extension", [n], message))

        known = "configured" if "configured" in annotations else "computed"
        totals[n] = Entry(
            accumulated.group, accumulated.unknown, Entry.default_annotation(accumulated.unknown, known)
        )

    return totals, ambiguities


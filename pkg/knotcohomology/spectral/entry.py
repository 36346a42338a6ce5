# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

"""
entries of spectral sequence pages that may be only partially known

an entry is a known group plus an optional unknown summand, either "T" for
a finite group that is not determined (possibly trivial) or "?" for a group
about which nothing but the known free rank is asserted
"""

from ..linalg import AbelianGroup
from ..errors import InvalidInputError

finite_unknown = "T"
any_unknown = "?"

annotations = ["computed", "configured", "finite", "unknown"]


class Entry:
    def __init__(self, group=None, unknown=None, annotation=None):
        if group is None:
            group = AbelianGroup()
        if unknown not in (None, finite_unknown, any_unknown):
            raise InvalidInputError(f'Unknown summand must be "T" or "?", got "{unknown}"')

        if unknown is not None:
            group = group.free_part  # torsion is absorbed

        self.group = group
        self.unknown = unknown

        if annotation is None:
            annotation = self.default_annotation(unknown)
        if annotation not in annotations:
            raise InvalidInputError(f'Unknown annotation "{annotation}"')
        self.annotation = annotation

    @staticmethod
    def default_annotation(unknown, known="computed"):
        if unknown == any_unknown:
            return "unknown"
        elif unknown == finite_unknown:
            return "finite"
        return known

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def parse(cls, text, annotation=None):
        """
        "Z⊕Z_3", "T", "Z⊕T", "Z⊕?", "?" or "0"
        """
        tokens = [t for t in text.replace(" ", "").replace("+", "⊕").split("⊕") if len(t) > 0]

        unknown = None
        known = []
        for token in tokens:
            if token in (finite_unknown, any_unknown):
                if unknown == any_unknown or token == any_unknown:
                    unknown = any_unknown
                else:
                    unknown = finite_unknown
            else:
                known.append(token)

        return cls(AbelianGroup.parse("⊕".join(known)), unknown, annotation)

    @classmethod
    def coerce(cls, value):
        if isinstance(value, Entry):
            return value
        elif isinstance(value, AbelianGroup):
            return cls(value)
        elif isinstance(value, str):
            return cls.parse(value)
        raise InvalidInputError(f"Cannot read entry from {value!r}")

    def with_annotation(self, annotation):
        return Entry(self.group, self.unknown, annotation)

    @property
    def free_rank(self):
        return self.group.free_rank

    @property
    def is_zero(self):
        return self.group.is_zero and self.unknown is None

    @property
    def is_known(self):
        return self.unknown is None

    @property
    def is_finite(self):
        return self.group.free_rank == 0 and self.unknown != any_unknown

    @property
    def has_torsion(self):
        return len(self.group.torsion) > 0 or self.unknown is not None

    def direct_sum(self, other):
        unknown = None
        if any_unknown in (self.unknown, other.unknown):
            unknown = any_unknown
        elif finite_unknown in (self.unknown, other.unknown):
            unknown = finite_unknown
        return Entry(self.group + other.group, unknown)

    def compatible(self, other):
        """
        whether the two entries can describe the same group, an unknown
        summand matches anything that agrees with the known free rank
        """
        if self.unknown is None and other.unknown is None:
            return self.group == other.group

        for a, b in ((self, other), (other, self)):
            if a.unknown == any_unknown:
                if b.unknown == any_unknown:
                    return True
                if b.free_rank < a.free_rank:
                    return False
                return True

        # both finite unknowns, or a finite unknown against a known group
        return self.free_rank == other.free_rank

    def __eq__(self, other):
        if isinstance(other, AbelianGroup):
            other = Entry(other)
        if not isinstance(other, Entry):
            return NotImplemented
        return self.group == other.group and self.unknown == other.unknown

    def __hash__(self):
        return hash((self.group, self.unknown))

    def __bool__(self):
        return not self.is_zero

    def __repr__(self):
        return f'Entry("{self}", {self.annotation})'

    def __str__(self):
        if self.unknown is None:
            return str(self.group)
        if self.group.is_zero:
            return self.unknown
        return f"{self.group}⊕{self.unknown}"

    def to_dict(self):
        return dict(group=str(self), annotation=self.annotation)


class SSTable:
    """
    sparse page of a spectral sequence, absent coordinates are zero
    """

    def __init__(self, coordinates=("x", "y"), entries=None, name=None, rho=None):
        self.coordinates = tuple(coordinates)
        self.entries = dict()
        self.name = name
        self.rho = rho
        for (x, y), entry in (entries or dict()).items():
            self[x, y] = entry

    def __getitem__(self, coordinate):
        return self.entries.get(tuple(coordinate), Entry())

    def __setitem__(self, coordinate, entry):
        coordinate = tuple(int(c) for c in coordinate)
        entry = Entry.coerce(entry)
        if entry.is_zero:
            self.entries.pop(coordinate, None)
        else:
            self.entries[coordinate] = entry

    def __contains__(self, coordinate):
        return tuple(coordinate) in self.entries

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(sorted(self.entries))

    def __eq__(self, other):
        if not isinstance(other, SSTable):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self):
        return f"SSTable({self.name or ', '.join(self.coordinates)}, {len(self)} entries)"

    def items(self):
        return [(coordinate, self.entries[coordinate]) for coordinate in self]

    def copy(self, name=None):
        return SSTable(self.coordinates, dict(self.entries), name or self.name, self.rho)

    def columns(self):
        return sorted(set(x for x, _ in self.entries))

    def rows(self):
        return sorted(set(y for _, y in self.entries))

    def column(self, x):
        return {y: entry for (x0, y), entry in self.items() if x0 == x}

    def total_degrees(self):
        return sorted(set(x + y for x, y in self.entries))

    def at_total(self, n):
        return {(x, y): entry for (x, y), entry in self.items() if x + y == n}

    def update(self, other):
        for coordinate, entry in other.items():
            self[coordinate] = entry

    def to_dict(self):
        return dict(
            name=self.name,
            coordinates=list(self.coordinates),
            entries=[
                dict(x=cx, y=cy, **entry.to_dict())
                for (cx, cy), entry in self.items()
            ],
        )

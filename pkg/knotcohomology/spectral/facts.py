# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

"""
geometric facts that the computation cannot derive, loaded from a json
file and looked up by kind and rho
"""

import logging
from pathlib import Path

from marshmallow import ValidationError

from .entry import Entry
from ..model import FactsFileSchema, GeometricFact
from ..resource import facts_file
from ..errors import InvalidInputError

logger = logging.getLogger("knotcohomology.spectral")

differential_fact_kinds = {
    "aux-d1-iso": "iso",
    "aux-d1-free-to-infinite": "free-to-infinite",
}


class FactRegistry:
    """
    read only collection of facts that remembers which of them were used
    """

    def __init__(self, facts=None, path=None):
        self.facts = list(facts or [])
        self.path = path
        self.consumed = set()

    def fresh(self):
        return FactRegistry(self.facts, self.path)

    def __len__(self):
        return len(self.facts)

    def __iter__(self):
        return iter(self.facts)

    def __repr__(self):
        return f"FactRegistry({len(self)} facts, {len(self.consumed)} consumed)"

    @property
    def ids(self):
        return sorted(fact.id for fact in self.facts)

    def consume(self, fact):
        if fact.id not in self.consumed:
            logger.debug(f'Using fact "{fact.id}"')
        self.consumed.add(fact.id)
        return fact

    def unconsumed(self):
        return sorted(set(self.ids) - self.consumed)

    def find(self, kind, rho=None, **match):
        """
        facts of the given kind for rho, optionally filtered by data values,
        facts without rho apply to every rho
        """
        result = []
        for fact in self.facts:
            if fact.kind != kind:
                continue
            if rho is not None and fact.rho is not None and fact.rho != rho:
                continue
            if any(fact.data.get(key) != value for key, value in match.items()):
                continue
            result.append(fact)
        return result

    def first(self, kind, rho=None, **match):
        """
        consume and return the first matching fact, or None
        """
        facts = self.find(kind, rho, **match)
        if len(facts) == 0:
            return
        if len(facts) > 1:
            logger.warning(f'Found {len(facts)} facts of kind "{kind}" for rho={rho}, using "{facts[0].id}"')
        return self.consume(facts[0])

    def differential_facts(self, rho):
        """
        the declared differentials for rho as (page, source, target) -> (kind, id)
        """
        result = dict()
        for kind, differential_kind in differential_fact_kinds.items():
            for fact in self.find(kind, rho):
                if fact.rho is None:
                    continue
                page = fact.data.get("page", 1)
                source, target = tuple(fact.data["source"]), tuple(fact.data["target"])
                result[(page, source, target)] = (differential_kind, fact.id)
        return result

    def homology_values(self, block, rho=None):
        """
        the graded entries of a block, or None when no fact names the block
        """
        fact = self.first("homology-values", rho, block=block)
        if fact is None:
            return

        origin = fact.data.get("degree_origin")
        offset = 0
        if origin is not None:
            if rho is None:
                raise InvalidInputError(f'Fact "{fact.id}" has degrees relative to rho')
            offset = origin * rho

        return {int(d) + offset: Entry.parse(text, "configured") for d, text in fact.data["values"].items()}


def load_facts(path=None):
    """
    read and validate a facts file, by default the bundled one
    """
    path = Path(facts_file(path))

    logger.info(f'Loading facts file "{path}"')

    try:
        with open(path, "r") as f:
            document = FactsFileSchema().loads(f.read())
    except FileNotFoundError:
        raise InvalidInputError(f'Facts file "{path}" not found')
    except ValidationError as e:
        logger.warning(f'Validation error in "{path}": %s', e.messages)
        raise
    except ValueError as e:
        raise InvalidInputError(f'Cannot read facts file "{path}": {e}')

    facts = document["facts"]
    logger.debug(f"Loaded {len(facts)} facts: {', '.join(fact.id for fact in facts)}")

    return FactRegistry(facts, path)


def empty_facts():
    return FactRegistry([])


def dump_facts(registry):
    return FactsFileSchema().dumps(dict(facts=registry.facts), indent=4, sort_keys=True)

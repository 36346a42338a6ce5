# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

"""
explicit cycles generating the homology of B(C, 4) with coefficients in Z
and of the matching covering, which has the homology with coefficients A2hat
"""

import logging
from math import inf

from .homology import config_complex, covering_complex
from .published import parse_chain
from ..linalg import class_order, generates_homology, is_cycle
from ..rep import trivial
from ..errors import InvalidInputError

logger = logging.getLogger("knotcohomology.cells")


class GeneratingCycle:
    def __init__(self, degree, expression, order):
        self.degree = degree
        self.expression = expression
        self.order = order

    def __repr__(self):
        order = "infinite" if self.order == inf else self.order
        return f"GeneratingCycle({self.degree}, {self.expression}, order={order})"


def _plain(expression):
    """
    chain of the base cells, read through the covering notation on one sheet
    """
    return {name.rsplit("_", 1)[0]: v for name, v in parse_chain(expression.replace(")", ")_2")).items()}


_listed = {
    "Z": [
        GeneratingCycle(8, "e(1111)", inf),
        GeneratingCycle(7, "e(211) - e(121) + e(112)", inf),
        GeneratingCycle(5, "e(4)", 2),
    ],
    "A2hat": [
        GeneratingCycle(8, "e(1111)_2 + e(1111)_3 + e(1111)_4", inf),
        GeneratingCycle(
            7,
            "e(211)_2 + e(211)_3 + e(211)_4 - e(121)_2 - e(121)_3 - e(121)_4 + e(112)_2 + e(112)_3 + e(112)_4",
            inf,
        ),
        GeneratingCycle(7, "e(211)_3 - e(121)_3 + e(112)_3", inf),
        GeneratingCycle(6, "e(31)_2 - e(13)_2", inf),
        GeneratingCycle(6, "e(31)_3", 2),
        GeneratingCycle(5, "e(4)_2", 2),
        GeneratingCycle(5, "e(4)_3", 2),
    ],
}


def generating_cycles(coefficients):
    """
    the listed cycles together with the complex they live in and their chains
    """
    if coefficients not in _listed:
        raise InvalidInputError(f'No generating cycles are listed for coefficients "{coefficients}"')

    if coefficients == "Z":
        c = config_complex(2, 4, trivial(4))
        chains = [_plain(cycle.expression) for cycle in _listed["Z"]]
    else:
        c = covering_complex()
        chains = [parse_chain(cycle.expression) for cycle in _listed["A2hat"]]

    return c, list(zip(_listed[coefficients], chains))


def check_generating_cycles(coefficients):
    """
    violations of: every listed chain is a cycle of the listed order, and the
    listed classes generate the homology in each degree
    """
    c, cycles = generating_cycles(coefficients)

    violations = []
    by_degree = dict()
    for cycle, chain in cycles:
        if not is_cycle(c, cycle.degree, chain):
            violations.append(f"{cycle.expression} is not a cycle")
            continue
        order = class_order(c, cycle.degree, chain)
        if order != cycle.order:
            violations.append(f"{cycle.expression} has order {order}, expected {cycle.order}")
        by_degree.setdefault(cycle.degree, list()).append(chain)

    for degree in c.range():
        if not generates_homology(c, degree, by_degree.get(degree, [])):
            violations.append(f"listed cycles do not generate degree {degree}")

    for violation in violations:
        logger.warning(f"{coefficients}: {violation}")

    return violations

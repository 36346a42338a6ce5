# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

"""
the local systems that come with the package, the trivial and sign
representations of S(n), the permutation representation of S(4) on the
three matchings of four points and its two-dimensional quotient
"""

from .base import SnRepresentation, kron, as_matrix
from ..errors import RepresentationError, InvalidInputError

# the three matchings of four points, indexed by the partner of point 1
matchings = [((1, 2), (3, 4)), ((1, 3), (2, 4)), ((1, 4), (2, 3))]
matching_subscripts = [2, 3, 4]


def canonical_matching(pairs):
    return tuple(sorted(tuple(sorted(pair)) for pair in pairs))


def matching_subscript(pairs):
    """
    the point matched with point 1
    """
    for a, b in pairs:
        if a == 1:
            return b
        if b == 1:
            return a
    raise InvalidInputError(f"Point 1 is not matched in {pairs}")


def permute_matching(perm, pairs):
    return canonical_matching([(perm[a - 1], perm[b - 1]) for a, b in pairs])


def _matching_permutation_matrix(perm):
    columns = []
    for pairs in matchings:
        image = permute_matching(perm, pairs)
        columns.append([int(image == canonical_matching(target)) for target in matchings])
    return as_matrix([[columns[j][i] for j in range(3)] for i in range(3)])


def trivial(n):
    return SnRepresentation(n, [[[1]]] * (n - 1), name="Z")


def sign(n):
    return SnRepresentation(n, [[[-1]]] * (n - 1), name="sign")


def matching_rep_hat():
    """
    permutation representation of S(4) on the three matchings of four points,
    basis ordered by the partner of point 1
    """
    generators = [_matching_permutation_matrix(s) for s in [(2, 1, 3, 4), (1, 3, 2, 4), (1, 2, 4, 3)]]
    return SnRepresentation(4, generators, name="A2hat")


# quotient of Z^3 by the diagonal, basis the images of the first two matchings
matching_quotient = as_matrix([[1, 0, -1], [0, 1, -1]])
matching_section = as_matrix([[1, 0], [0, 1], [0, 0]])


def matching_rep():
    hat = matching_rep_hat()
    generators = [matching_quotient.dot(g).dot(matching_section) for g in hat.generators]
    return SnRepresentation(4, generators, name="A2")


def tensor(r1, r2):
    if r1.n != r2.n:
        raise RepresentationError(f"Cannot tensor representations of S({r1.n}) and S({r2.n})")

    name = None
    if r1.name is not None and r2.name is not None:
        name = f"{r1.name}⊗{r2.name}"

    generators = [kron(a, b) for a, b in zip(r1.generators, r2.generators)]
    return SnRepresentation(r1.n, generators, name=name)


registry_names = ["Z", "sign", "A2", "A2hat", "sign⊗A2"]

aliases = {
    "trivial": "Z",
    "±Z": "sign",
    "signxA2": "sign⊗A2",
    "sign*A2": "sign⊗A2",
}


def get_representation(name, n):
    """
    look up a local system by its command line name
    """
    name = aliases.get(name, name)
    if name == "Z":
        return trivial(n)
    if name == "sign":
        return sign(n)

    if name in ("A2", "A2hat", "sign⊗A2") and n != 4:
        raise InvalidInputError(f'Local system "{name}" is defined for n = 4 only, got n = {n}')

    if name == "A2":
        return matching_rep()
    if name == "A2hat":
        return matching_rep_hat()
    if name == "sign⊗A2":
        return tensor(sign(4), matching_rep())

    raise InvalidInputError(f'Unknown local system "{name}"')

# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from itertools import combinations

import networkx as nx

from ..errors import InvalidInputError


def all_edges(a):
    return list(combinations(range(1, a + 1), 2))


class SimpleGraph:
    """
    simple graph on the vertices 1, ..., a, edges are sorted pairs
    kept in lexicographic order, which is the vertex order of the
    corresponding face of the simplex spanned by all edges
    """

    def __init__(self, vertex_count, edges=()):
        vertex_count = int(vertex_count)
        if vertex_count < 2:
            raise InvalidInputError(f"Graph needs at least two vertices, got {vertex_count}")

        normalized = set()
        for edge in edges:
            i, j = sorted(int(v) for v in edge)
            if i == j:
                raise InvalidInputError(f"Loop at vertex {i} is not allowed")
            if i < 1 or j > vertex_count:
                raise InvalidInputError(f"Edge ({i}, {j}) outside of vertices 1..{vertex_count}")
            normalized.add((i, j))

        self.vertex_count = vertex_count
        self.edges = tuple(sorted(normalized))

    @classmethod
    def parse(cls, vertex_count, text):
        """
        read the edge list notation "12,13,24"
        """
        text = text.strip()
        if len(text) == 0:
            return cls(vertex_count)
        edges = []
        for token in text.split(","):
            token = token.strip()
            if len(token) != 2 or not token.isdigit():
                raise InvalidInputError(f'Cannot parse edge "{token}"')
            edges.append((int(token[0]), int(token[1])))
        return cls(vertex_count, edges)

    @property
    def name(self):
        return ",".join(f"{i}{j}" for i, j in self.edges)

    @property
    def dimension(self):
        return len(self.edges) - 1

    def __repr__(self):
        return f"SimpleGraph({self.vertex_count}, [{self.name}])"

    def __eq__(self, other):
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertex_count, self.edges))

    def __lt__(self, other):
        return (len(self.edges), self.edges) < (len(other.edges), other.edges)

    def without_edge(self, position):
        edges = self.edges[:position] + self.edges[position + 1:]
        return SimpleGraph(self.vertex_count, edges)

    def relabeled(self, perm):
        """
        image under the vertex permutation i -> perm[i - 1]
        """
        return SimpleGraph(self.vertex_count, [(perm[i - 1], perm[j - 1]) for i, j in self.edges])

    def to_networkx(self, vertices=None):
        g = nx.Graph()
        if vertices is None:
            vertices = range(1, self.vertex_count + 1)
        vertices = set(vertices)
        g.add_nodes_from(vertices)
        g.add_edges_from(edge for edge in self.edges if vertices.issuperset(edge))
        return g


def is_connected(g):
    return nx.is_connected(g.to_networkx())


def is_two_connected(g):
    """
    connected, and stays connected after removing any single vertex
    together with its incident edges
    """
    if not is_connected(g):
        return False
    for v in range(1, g.vertex_count + 1):
        rest = [u for u in range(1, g.vertex_count + 1) if u != v]
        if not nx.is_connected(g.to_networkx(rest)):
            return False
    return True


predicates = {
    "connected": is_connected,
    "two_connected": is_two_connected,
}

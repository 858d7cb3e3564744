"""Immutable simple undirected graphs on dense vertex ids 0..n-1.

Adjacency is kept twice: as frozensets (convenient for set algebra in the
feasibility predicates) and as per-vertex bitmasks (fast popcount degree
queries in the exhaustive solver paths). Both are built once at
construction; Graph values are never mutated afterwards and are safe to
share between concurrent searches.
"""

from __future__ import annotations

from typing import Iterable

from .errors import (
    EmptyGraphError,
    EmptySetError,
    LoopEdgeError,
    SameVertexError,
    VertexOutOfRangeError,
)

VertexSet = frozenset  # alias used in signatures; any Iterable[int] is accepted


class Graph:
    """Simple undirected graph. Duplicate input edges are collapsed,
    self-loops are rejected."""

    __slots__ = ("n", "m", "adj", "adj_mask")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise VertexOutOfRangeError(n, 0)
        neighbor_sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n):
                raise VertexOutOfRangeError(u, n)
            if not (0 <= v < n):
                raise VertexOutOfRangeError(v, n)
            if u == v:
                raise LoopEdgeError(u)
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)
        self.n = n
        self.adj = tuple(frozenset(s) for s in neighbor_sets)
        self.adj_mask = tuple(_mask(s) for s in neighbor_sets)
        self.m = sum(len(s) for s in neighbor_sets) // 2

    # -- basic queries ----------------------------------------------------

    def degree(self, u: int) -> int:
        self._check_vertex(u)
        return len(self.adj[u])

    def degree_in(self, u: int, X: Iterable[int]) -> int:
        """d_X(u): neighbors of u inside X. u itself need not belong to X."""
        self._check_vertex(u)
        X = self._check_subset(X)
        return len(self.adj[u] & X)

    def edges_within(self, X: Iterable[int]) -> int:
        """e(X): edges with both ends in X."""
        X = self._check_subset(X)
        return sum(len(self.adj[u] & X) for u in X) // 2

    def edge_indicator(self, u: int, v: int) -> int:
        """e(u,v): 1 iff uv is an edge. Requires u != v."""
        if u == v:
            raise SameVertexError(u)
        self._check_vertex(u)
        self._check_vertex(v)
        return 1 if v in self.adj[u] else 0

    def min_degree(self) -> int:
        if self.n == 0:
            raise EmptyGraphError("minimum degree of the empty graph")
        return min(len(s) for s in self.adj)

    def induced_subgraph(self, X: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Subgraph induced by X, relabelled to 0..|X|-1 in ascending id
        order. Returns the new graph and the old->new id map."""
        X = self._check_subset(X)
        if not X:
            raise EmptySetError("cannot induce on the empty set")
        order = sorted(X)
        remap = {u: i for i, u in enumerate(order)}
        edges = [
            (remap[u], remap[v])
            for u in order
            for v in self.adj[u] & X
            if u < v
        ]
        return Graph(len(order), edges), remap

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted (u, v) pairs with u < v."""
        return sorted((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    def vertices(self) -> frozenset:
        return frozenset(range(self.n))

    # -- plumbing ----------------------------------------------------------

    def _check_vertex(self, u: int) -> None:
        if not (0 <= u < self.n):
            raise VertexOutOfRangeError(u, self.n)

    def _check_subset(self, X: Iterable[int]) -> frozenset:
        X = X if isinstance(X, frozenset) else frozenset(X)
        for u in X:
            if not (0 <= u < self.n):
                raise VertexOutOfRangeError(u, self.n)
        return X

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validating constructor; the canonical way to make a Graph."""
    return Graph(n, edges)


def _mask(vertices: Iterable[int]) -> int:
    mask = 0
    for u in vertices:
        mask |= 1 << u
    return mask


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask with bit u set for each vertex u."""
    return _mask(vertices)


def set_of(mask: int) -> frozenset:
    """Inverse of mask_of."""
    out = []
    u = 0
    while mask:
        if mask & 1:
            out.append(u)
        mask >>= 1
        u += 1
    return frozenset(out)

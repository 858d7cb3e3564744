"""Set-level feasibility predicates and the pair-to-partition extension.

The vocabulary: a set X is f-nice when every member keeps at least f(u)
neighbors inside X, and f-degenerate when every nonempty subset has a
member below its threshold. Both reduce to one primitive, the peeling
core f_core: the unique maximal subset of X in which every vertex meets
its threshold. "Good" and "meager" are the same ideas with the side-1
threshold a(u)+1 and the side-2 threshold b(u)+h(u).

All functions are pure over immutable inputs. Thresholds and demands are
plain per-vertex integer sequences indexed by vertex id.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    EmptySetError,
    InternalInvariantError,
    NotAPartitionError,
    PreconditionViolatedError,
)
from .graph import Graph


@dataclass(frozen=True)
class DemandPair:
    """Per-vertex demands a(u), b(u); both non-negative."""

    a: tuple
    b: tuple

    def __post_init__(self):
        if len(self.a) != len(self.b):
            raise ValueError("demand vectors must have equal length")
        if any(x < 0 for x in self.a) or any(x < 0 for x in self.b):
            raise ValueError("demands must be non-negative")
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))

    @classmethod
    def uniform(cls, n: int, a: int, b: int) -> "DemandPair":
        return cls((a,) * n, (b,) * n)

    @property
    def n(self) -> int:
        return len(self.a)

    def total(self) -> int:
        """Sum of a(u)+b(u) over all vertices."""
        return sum(self.a) + sum(self.b)


@dataclass(frozen=True)
class Partition:
    """Ordered pair of disjoint vertex sets; in finished results both are
    nonempty and cover V, but sides may be empty mid-search."""

    x1: frozenset
    x2: frozenset

    def __post_init__(self):
        object.__setattr__(self, "x1", frozenset(self.x1))
        object.__setattr__(self, "x2", frozenset(self.x2))

    def check_partition_of(self, G: Graph) -> None:
        if self.x1 & self.x2:
            raise NotAPartitionError(f"sides overlap: {sorted(self.x1 & self.x2)}")
        if len(self.x1) + len(self.x2) != G.n:
            missing = sorted(set(range(G.n)) - self.x1 - self.x2)
            raise NotAPartitionError(f"vertices not covered: {missing}")

    def side_of(self, u: int) -> int:
        if u in self.x1:
            return 1
        if u in self.x2:
            return 2
        raise KeyError(u)


def _as_set(X: Iterable[int]) -> frozenset:
    return X if isinstance(X, frozenset) else frozenset(X)


def side_threshold(d: DemandPair, h: Sequence[int], side: int) -> tuple:
    """Peeling threshold whose empty core characterizes i-meagerness:
    a(u)+1 for side 1, b(u)+h(u) for side 2."""
    if side == 1:
        return tuple(x + 1 for x in d.a)
    if side == 2:
        return tuple(b + hv for b, hv in zip(d.b, h))
    raise ValueError(f"side must be 1 or 2, got {side}")


def bad_vertices(
    G: Graph, X: Iterable[int], side: int, d: DemandPair, h: Sequence[int]
) -> frozenset:
    """B_1(X) = {u in X : d_X(u) <= a(u)} or
    B_2(X) = {u in X : d_X(u) <= b(u)+h(u)-1}.

    A threshold of -1 on side 2 (b(u)=h(u)=0) is unsatisfiable, so such
    vertices are never bad."""
    X = G._check_subset(_as_set(X))
    if side == 1:
        return frozenset(u for u in X if len(G.adj[u] & X) <= d.a[u])
    if side == 2:
        return frozenset(u for u in X if len(G.adj[u] & X) <= d.b[u] + h[u] - 1)
    raise ValueError(f"side must be 1 or 2, got {side}")


def f_core(G: Graph, X: Iterable[int], f: Sequence[int]) -> frozenset:
    """Maximal Y subseteq X with d_Y(u) >= f(u) for all u in Y, obtained by
    peeling. The result is independent of deletion order; violators are
    processed in ascending id purely so traces are reproducible."""
    X = G._check_subset(_as_set(X))
    deg = {u: len(G.adj[u] & X) for u in X}
    heap = sorted(u for u in X if deg[u] < f[u])
    alive = set(X)
    while heap:
        u = heapq.heappop(heap)
        if u not in alive:
            continue
        alive.discard(u)
        for w in G.adj[u]:
            if w in alive:
                deg[w] -= 1
                if deg[w] == f[w] - 1:  # just crossed the threshold
                    heapq.heappush(heap, w)
    return frozenset(alive)


def is_nice(G: Graph, X: Iterable[int], f: Sequence[int]) -> bool:
    """f-nice (= f-feasible): d_X(x) >= f(x) for every x in X."""
    X = G._check_subset(_as_set(X))
    if not X:
        raise EmptySetError("niceness is defined for nonempty sets")
    return all(len(G.adj[u] & X) >= f[u] for u in X)


def is_good(
    G: Graph, X: Iterable[int], side: int, d: DemandPair, h: Sequence[int]
) -> bool:
    """i-good: B_i(X) is empty."""
    X = _as_set(X)
    if not X:
        raise EmptySetError("goodness is defined for nonempty sets")
    return not bad_vertices(G, X, side, d, h)


def is_meager(
    G: Graph, X: Iterable[int], side: int, d: DemandPair, h: Sequence[int]
) -> bool:
    """i-meager: every nonempty subset of X has a bad vertex. Equivalent to
    the side-threshold peeling core of X being empty."""
    X = _as_set(X)
    if not X:
        raise EmptySetError("meagerness is defined for nonempty sets")
    return not f_core(G, X, side_threshold(d, h, side))


def is_degenerate_set(G: Graph, X: Iterable[int], f: Sequence[int]) -> bool:
    """f-degenerate: every nonempty subset X' has a vertex x with
    d_{X'}(x) <= f(x). Dual of containing an (f+1)-core."""
    X = _as_set(X)
    if not X:
        raise EmptySetError("degeneracy is defined for nonempty sets")
    return not f_core(G, X, tuple(x + 1 for x in f))


def is_feasible_pair(
    G: Graph, A: Iterable[int], B: Iterable[int], d: DemandPair
) -> bool:
    """(a,b)-feasible pair: A, B nonempty, disjoint, A a-nice and B b-nice.
    Violations return False rather than raising."""
    A, B = _as_set(A), _as_set(B)
    if not A or not B or (A & B):
        return False
    return is_nice(G, A, d.a) and is_nice(G, B, d.b)


def is_feasible_partition(G: Graph, P: Partition, d: DemandPair) -> bool:
    """Feasible pair that additionally covers V. Raises NotAPartition when
    the sides overlap or miss vertices."""
    P.check_partition_of(G)
    return is_feasible_pair(G, P.x1, P.x2, d)


def extend_pair_to_partition(
    G: Graph, d: DemandPair, A: Iterable[int], B: Iterable[int]
) -> Partition:
    """Grow a feasible pair (A, B) into a feasible partition (A*, V \\ A*).

    Requires d_G(u) >= a(u)+b(u) for every vertex (true under every
    hypothesis this package checks). Greedily absorbs into A any outside
    vertex v with d_A(v) >= a(v); A stays a-nice because member degrees
    only grow. At the fixpoint every leftover v has d_A(v) <= a(v)-1 and
    therefore d_{V\\A}(v) >= d_G(v)-a(v)+1 >= b(v)+1, so the complement is
    b-nice. The result is validated before it is returned.
    """
    A, B = _as_set(A), _as_set(B)
    for u in range(G.n):
        if len(G.adj[u]) < d.a[u] + d.b[u]:
            raise PreconditionViolatedError(
                f"d_G({u}) = {len(G.adj[u])} < a+b = {d.a[u] + d.b[u]}"
            )
    if not is_feasible_pair(G, A, B, d):
        raise PreconditionViolatedError("(A, B) is not a feasible pair")

    grown = set(A)
    outside = sorted(set(range(G.n)) - A - B)
    changed = True
    while changed:
        changed = False
        for v in outside:
            if v not in grown and len(G.adj[v] & grown) >= d.a[v]:
                grown.add(v)
                changed = True
    result = Partition(frozenset(grown), frozenset(range(G.n)) - grown)
    if not is_feasible_partition(G, result, d):
        raise InternalInvariantError("extension produced an infeasible partition")
    return result

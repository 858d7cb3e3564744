"""Structural vertex classification and hypothesis checking.

Two prescribed 5-vertex patterns drive the classifications:

* the book with three pages: a spine edge {x, y} plus three page vertices
  each adjacent to both ends of the spine (equivalently, two triangles
  sharing an edge plus one more vertex joined to the two shared ends);
* the complete bipartite graph with parts of sizes 2 and 3.

A vertex is "marked" (h = 1) when it lies in at least one subgraph
isomorphic to the pattern; containment is as subgraph, never induced.
Detection runs on common-neighbor counts; the naive 5-tuple embedding
enumeration is kept as a reference oracle for the test suite.

hypothesis_report evaluates six sufficient conditions for the existence
of a feasible partition, labelled A/B/C/D/main_i/main_ii in serialized
output:

* A: d(u) >= a(u)+b(u)+1 everywhere (no structural restriction);
* B: biclique-free graphs with a, b >= 1 and d >= a+b;
* C: book-free graphs on >= 5 vertices with d >= a+b;
* D: short-cycle-pair marking (s1_vertices) with d >= a+b-1+2h and
  min(a, b) >= 2(1-h);
* main_i: book marking, d >= a+b+h and min(a, b) >= 1-h, n >= 5;
* main_ii: biclique marking, d >= a+b+h and min(a, b) >= 2-h, n >= 5.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations, permutations
from typing import Sequence

from .errors import UnsupportedKindError
from .feasibility import DemandPair
from .graph import Graph, mask_of


class PatternKind(str, Enum):
    BOOK_B3 = "b3"
    K23 = "k23"
    CYCLE_PAIR_S1 = "s1"


@dataclass(frozen=True)
class Classification:
    """Marking of vertices relative to a pattern: t1 is the covered set,
    h its 0/1 indicator vector."""

    kind: PatternKind
    t1: frozenset
    h: tuple


@dataclass(frozen=True)
class TheoremCheck:
    holds: bool
    failing_vertices: frozenset
    reason: str


@dataclass(frozen=True)
class HypothesisReport:
    a: TheoremCheck
    b: TheoremCheck
    c: TheoremCheck
    d: TheoremCheck
    main_i: TheoremCheck
    main_ii: TheoremCheck
    n_at_least_5: bool

    def as_bools(self) -> dict:
        return {
            "A": self.a.holds,
            "B": self.b.holds,
            "C": self.c.holds,
            "D": self.d.holds,
            "main_i": self.main_i.holds,
            "main_ii": self.main_ii.holds,
        }

    def to_dict(self) -> dict:
        def one(t: TheoremCheck) -> dict:
            return {
                "holds": t.holds,
                "failing": sorted(t.failing_vertices),
                "reason": t.reason,
            }

        return {
            "A": one(self.a),
            "B": one(self.b),
            "C": one(self.c),
            "D": one(self.d),
            "main_i": one(self.main_i),
            "main_ii": one(self.main_ii),
            "n_at_least_5": self.n_at_least_5,
        }


# -- detectors -------------------------------------------------------------


def classify_book_b3(G: Graph, variant: str = "strict") -> frozenset:
    """Vertices covered by some book: a spine edge with >= 3 common
    neighbors covers both ends and every common neighbor.

    variant="strict" attaches the extra vertex to the two spine ends (the
    reading used everywhere in this package). variant="loose" additionally
    detects the two other ways of joining a fifth vertex to two vertices of
    a two-triangle diamond, for experimentation.
    """
    if variant not in ("strict", "loose"):
        raise ValueError(f"unknown book variant {variant!r}")
    t1: set = set()
    for u in range(G.n):
        for v in G.adj[u]:
            if v < u:
                continue
            common = G.adj[u] & G.adj[v]
            if len(common) >= 3:
                t1.add(u)
                t1.add(v)
                t1 |= common
    if variant == "loose":
        t1 |= _loose_book_attachments(G)
    return frozenset(t1)


def _loose_book_attachments(G: Graph) -> set:
    """Covered sets for the diamond-plus-vertex attachments other than the
    spine one: the fifth vertex joined to a spine end and a page, or to
    both pages."""
    covered: set = set()
    for x in range(G.n):
        for y in G.adj[x]:
            if y < x:
                continue
            common = G.adj[x] & G.adj[y]
            if len(common) < 2:
                continue
            for p, q in permutations(sorted(common), 2):
                diamond = {x, y, p, q}
                for spine_end in (x, y):
                    for w in (G.adj[spine_end] & G.adj[p]) - diamond:
                        covered |= diamond | {w}
                for w in (G.adj[p] & G.adj[q]) - diamond:
                    covered |= diamond | {w}
    return covered


def classify_k23(G: Graph) -> frozenset:
    """Vertices covered by some 2-by-3 biclique: any vertex pair (adjacent
    or not) with >= 3 common neighbors covers the pair and every common
    neighbor."""
    t1: set = set()
    for u, v in combinations(range(G.n), 2):
        common = G.adj[u] & G.adj[v]
        if len(common) >= 3:
            t1.add(u)
            t1.add(v)
            t1 |= common
    return frozenset(t1)


def s1_vertices(G: Graph) -> frozenset:
    """Endpoints of edges that lie on two cycles of length 3 or 4 with
    different vertex sets.

    Per edge uv, cycle vertex sets are collected as {u, v, w} for common
    neighbors w (triangles) and {u, v, x, y} for paths u-x, x-y, y-v with
    x, y outside the edge (4-cycles, chords permitted); two distinct sets
    put both endpoints in the result."""
    s1: set = set()
    for u in range(G.n):
        for v in G.adj[u]:
            if v < u:
                continue
            cycle_sets = {frozenset((u, v, w)) for w in G.adj[u] & G.adj[v]}
            for x in G.adj[u]:
                if x == v:
                    continue
                for y in G.adj[x] & G.adj[v]:
                    if y != u:
                        cycle_sets.add(frozenset((u, v, x, y)))
            if len(cycle_sets) >= 2:
                s1.add(u)
                s1.add(v)
    return frozenset(s1)


def classify(
    G: Graph, kind: PatternKind, b3_variant: str = "strict"
) -> Classification:
    if kind == PatternKind.BOOK_B3:
        t1 = classify_book_b3(G, b3_variant)
    elif kind == PatternKind.K23:
        t1 = classify_k23(G)
    else:
        raise UnsupportedKindError(
            "short-cycle-pair marking has its own semantics; use s1_vertices"
        )
    h = tuple(1 if u in t1 else 0 for u in range(G.n))
    return Classification(kind, t1, h)


# -- brute-force reference oracle -------------------------------------------

# Edge lists of the 5-vertex patterns, on vertices 0..4.
_BOOK_SPINE = ((0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4))
# diamond 0-1 spine, 2-3 pages; vertex 4 attached to a spine end and a page
_BOOK_MIXED = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (0, 4), (2, 4))
# vertex 4 attached to both pages
_BOOK_PAGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4))
_K23_EDGES = ((0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4))


def _pattern_templates(kind: PatternKind, b3_variant: str) -> tuple:
    if kind == PatternKind.K23:
        return (_K23_EDGES,)
    if kind == PatternKind.BOOK_B3:
        if b3_variant == "strict":
            return (_BOOK_SPINE,)
        return (_BOOK_SPINE, _BOOK_MIXED, _BOOK_PAGES)
    raise UnsupportedKindError(f"no embedding template for {kind}")


def contains_pattern_at(
    G: Graph, kind: PatternKind, u: int, b3_variant: str = "strict"
) -> bool:
    """Reference oracle: does some injective, edge-preserving embedding of
    the 5-vertex pattern cover u? Naive enumeration over ordered 5-tuples;
    intended for small n only."""
    G._check_vertex(u)
    templates = _pattern_templates(kind, b3_variant)
    if G.n < 5:
        return False
    others = [v for v in range(G.n) if v != u]
    adj = G.adj
    for rest in combinations(others, 4):
        S = (u,) + rest
        smask = mask_of(S)
        inside = sum((G.adj_mask[v] & smask).bit_count() for v in S) // 2
        for template in templates:
            if inside < len(template):
                continue
            for perm in permutations(S):
                ok = True
                for i, j in template:
                    if perm[j] not in adj[perm[i]]:
                        ok = False
                        break
                if ok:
                    return True
    return False


# -- hypothesis checks -------------------------------------------------------


def marked_condition_failures(
    G: Graph, d: DemandPair, h: Sequence[int], min_floor_base: int
) -> frozenset:
    """Vertices violating d(u) >= a(u)+b(u)+h(u) or
    min(a(u), b(u)) >= min_floor_base - h(u)."""
    bad = []
    for u in range(G.n):
        if len(G.adj[u]) < d.a[u] + d.b[u] + h[u]:
            bad.append(u)
        elif min(d.a[u], d.b[u]) < min_floor_base - h[u]:
            bad.append(u)
    return frozenset(bad)


def _degree_failures(G: Graph, d: DemandPair, slack: int) -> frozenset:
    return frozenset(
        u for u in range(G.n) if len(G.adj[u]) < d.a[u] + d.b[u] + slack
    )


def hypothesis_report(
    G: Graph, d: DemandPair, b3_variant: str = "strict"
) -> HypothesisReport:
    """Evaluate all six sufficient conditions; see the module docstring."""
    n_ok = G.n >= 5
    book = classify(G, PatternKind.BOOK_B3, b3_variant)
    biclique = classify(G, PatternKind.K23)

    # A: plain degree slack of one
    fail_a = _degree_failures(G, d, 1)
    check_a = TheoremCheck(not fail_a, fail_a, "" if not fail_a else "d(u) < a(u)+b(u)+1")

    # B: biclique-free, demands at least 1
    fail_b = set(_degree_failures(G, d, 0))
    fail_b |= {u for u in range(G.n) if min(d.a[u], d.b[u]) < 1}
    reasons_b = []
    if fail_b:
        reasons_b.append("degree or demand floor violated")
    if biclique.t1:
        reasons_b.append("contains a 2-by-3 biclique")
        fail_b |= biclique.t1
    check_b = TheoremCheck(not reasons_b, frozenset(fail_b), "; ".join(reasons_b))

    # C: book-free, at least five vertices
    fail_c = set(_degree_failures(G, d, 0))
    reasons_c = []
    if not n_ok:
        reasons_c.append("n < 5")
    if fail_c:
        reasons_c.append("d(u) < a(u)+b(u)")
    if book.t1:
        reasons_c.append("contains a three-page book")
        fail_c |= book.t1
    check_c = TheoremCheck(not reasons_c, frozenset(fail_c), "; ".join(reasons_c))

    # D: short-cycle-pair marking
    s1 = s1_vertices(G)
    fail_d = []
    for u in range(G.n):
        h = 1 if u in s1 else 0
        if len(G.adj[u]) < d.a[u] + d.b[u] - 1 + 2 * h:
            fail_d.append(u)
        elif min(d.a[u], d.b[u]) < 2 * (1 - h):
            fail_d.append(u)
    check_d = TheoremCheck(
        not fail_d,
        frozenset(fail_d),
        "" if not fail_d else "degree or demand floor violated",
    )

    def main_check(cls: Classification, base: int) -> TheoremCheck:
        fail = marked_condition_failures(G, d, cls.h, base)
        reasons = []
        if not n_ok:
            reasons.append("n < 5")
        if fail:
            reasons.append("degree or demand floor violated")
        return TheoremCheck(not reasons, fail, "; ".join(reasons))

    return HypothesisReport(
        a=check_a,
        b=check_b,
        c=check_c,
        d=check_d,
        main_i=main_check(book, 1),
        main_ii=main_check(biclique, 2),
        n_at_least_5=n_ok,
    )

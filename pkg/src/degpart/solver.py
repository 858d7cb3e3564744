"""Feasible-partition search: exchange local search plus exhaustive oracle.

The search maximizes the lexicographic potential (omega, -|X1|) where

    omega(X1, X2) = e(X1) + e(X2) + sum_{u in X1} b(u) + sum_{v in X2} a(v).

Three move types are available, all restricted to "bad" vertices (side-1
bad: d_{X1}(u) <= a(u); side-2 bad: d_{X2}(v) <= b(v)+h(v)-1):

    m1  move a side-1-bad u into X2   (omega delta >= 0 suffices: |X1| shrinks)
    m2  move a side-2-bad v into X1   (needs omega delta > 0)
    m3  swap a side-1-bad u with a side-2-bad v (needs omega delta > 0)

Every applied move strictly increases the potential, which is bounded, so
the loop terminates in at most (m + sum(a+b) + 1) * (n + 1) moves. Swaps
with zero omega delta do not increase the potential; they can be allowed
in a limited number per search for experimentation (allow_neutral_swaps).

After each applied move (and before the first) the current partition is
mined for a feasible pair by peeling both sides to their demand cores;
a found pair ends the search. h is frozen by the pattern classification
before the search starts and never depends on the side a vertex is on.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence

from .errors import (
    InternalInvariantError,
    TooLargeError,
    TooSmallError,
    WrongSideError,
)
from .feasibility import (
    DemandPair,
    Partition,
    extend_pair_to_partition,
    f_core,
    is_feasible_partition,
    side_threshold,
)
from .graph import Graph, set_of
from .patterns import HypothesisReport, PatternKind, classify, hypothesis_report


class Status(str, Enum):
    FOUND = "found"
    NONE_EXISTS = "none"
    UNKNOWN = "unknown"


@dataclass
class SolveConfig:
    seed: int = 0
    restarts: int = 8
    budget: Optional[int] = None  # default: 10 * move_budget(G, d)
    oracle_limit: int = 24
    allow_neutral_swaps: int = 0
    b3_variant: str = "strict"


@dataclass
class SolveStats:
    moves: int = 0
    restarts: int = 0
    oracle_used: bool = False
    local_search_success: bool = False

    def to_dict(self) -> dict:
        return {
            "moves": self.moves,
            "restarts": self.restarts,
            "oracle_used": self.oracle_used,
        }


@dataclass
class SearchState:
    partition: Partition
    omega: int
    trace: list = field(default_factory=list)
    pair: Optional[tuple] = None
    moves: int = 0


@dataclass
class SolveOutcome:
    status: Status
    partition: Optional[Partition]
    omega: Optional[int]
    stats: SolveStats
    hypothesis: HypothesisReport

    @property
    def theorem_violation(self) -> bool:
        """A guaranteed-existence hypothesis holds yet exhaustive search
        proved no partition exists: an implementation bug or a discovery."""
        return self.status == Status.NONE_EXISTS and (
            self.hypothesis.main_i.holds or self.hypothesis.main_ii.holds
        )


# -- potential and exact move deltas -----------------------------------------


def weight(G: Graph, d: DemandPair, P: Partition) -> int:
    """omega(X1, X2); bounded above by m + sum(a+b)."""
    P.check_partition_of(G)
    return (
        G.edges_within(P.x1)
        + G.edges_within(P.x2)
        + sum(d.b[u] for u in P.x1)
        + sum(d.a[v] for v in P.x2)
    )


def delta_move(G: Graph, d: DemandPair, P: Partition, u: int, to_side: int) -> int:
    """Exact omega change of moving u to the other side."""
    P.check_partition_of(G)
    d1 = len(G.adj[u] & P.x1)
    d2 = len(G.adj[u] & P.x2)
    if to_side == 2:
        if u not in P.x1:
            raise WrongSideError(f"vertex {u} is not on side 1")
        return d2 - d1 + d.a[u] - d.b[u]
    if to_side == 1:
        if u not in P.x2:
            raise WrongSideError(f"vertex {u} is not on side 2")
        return d1 - d2 + d.b[u] - d.a[u]
    raise ValueError(f"to_side must be 1 or 2, got {to_side}")


def delta_swap(G: Graph, d: DemandPair, P: Partition, u: int, v: int) -> int:
    """Exact omega change of exchanging u in X1 with v in X2."""
    P.check_partition_of(G)
    if u not in P.x1:
        raise WrongSideError(f"vertex {u} is not on side 1")
    if v not in P.x2:
        raise WrongSideError(f"vertex {v} is not on side 2")
    term_u = len(G.adj[u] & P.x2) - len(G.adj[u] & P.x1) + d.a[u] - d.b[u]
    term_v = len(G.adj[v] & P.x1) - len(G.adj[v] & P.x2) - d.a[v] + d.b[v]
    return term_u + term_v - 2 * G.edge_indicator(u, v)


def move_budget(G: Graph, d: DemandPair) -> int:
    """Upper bound on strictly improving moves: the potential lattice has
    at most (m + sum(a+b) + 1) * (n + 1) levels."""
    return (G.m + d.total() + 1) * (G.n + 1)


# -- pair extraction and initialization ---------------------------------------


def extract_feasible_pair(G: Graph, d: DemandPair, P: Partition):
    """Mine a feasible pair from a partition: peel each side to its demand
    core; when one side dies, retry with a single bad vertex crossed over.
    Returns (A, B) or None. Any returned pair is genuinely feasible."""
    A = f_core(G, P.x1, d.a)
    B = f_core(G, P.x2, d.b)
    if A and B:
        return A, B
    for u in sorted(u for u in P.x1 if len(G.adj[u] & P.x1) <= d.a[u]):
        A2 = f_core(G, P.x1 - {u}, d.a)
        B2 = f_core(G, P.x2 | {u}, d.b)
        if A2 and B2:
            return A2, B2
    for v in sorted(v for v in P.x2 if len(G.adj[v] & P.x2) <= d.b[v]):
        A2 = f_core(G, P.x1 | {v}, d.a)
        B2 = f_core(G, P.x2 - {v}, d.b)
        if A2 and B2:
            return A2, B2
    return None


def degenerate_init(
    G: Graph, d: DemandPair, h: Sequence[int], rng: Optional[random.Random] = None
) -> Partition:
    """Start from an inclusion-minimal side-2-good set: peel V minus a
    maximum-degree vertex to the b+h core, then shrink while any single
    removal still leaves a nonempty core. Falls back to a balanced random
    split when the initial core is already empty."""
    if G.n < 2:
        raise TooSmallError("need at least two vertices to partition")
    u0 = max(range(G.n), key=lambda u: (len(G.adj[u]), -u))
    thr = side_threshold(d, h, 2)
    x2 = f_core(G, frozenset(range(G.n)) - {u0}, thr)
    if not x2:
        if rng is None:
            rng = random.Random(0)
        x1 = frozenset(rng.sample(range(G.n), G.n // 2))
        return Partition(x1, frozenset(range(G.n)) - x1)
    shrunk = True
    while shrunk:
        shrunk = False
        for v in sorted(x2):
            core = f_core(G, x2 - {v}, thr)
            if core:
                x2 = core
                shrunk = True
                break
    return Partition(frozenset(range(G.n)) - x2, x2)


# -- local search --------------------------------------------------------------


def local_search(
    G: Graph,
    d: DemandPair,
    h: Sequence[int],
    init: Partition,
    budget: Optional[int] = None,
    allow_neutral_swaps: int = 0,
) -> SearchState:
    """First-improvement search over (omega, -|X1|), scanning moves in
    ascending vertex id (m1, then m2, then m3). Returns at the first
    extracted feasible pair, at the fixpoint, or when the budget runs out.
    """
    init.check_partition_of(G)
    if budget is None:
        budget = 10 * move_budget(G, d)
    adj = G.adj
    a, b = d.a, d.b
    s1, s2 = set(init.x1), set(init.x2)
    omega = weight(G, d, init)
    trace: list = []
    neutral_left = allow_neutral_swaps

    def current() -> Partition:
        return Partition(frozenset(s1), frozenset(s2))

    def state(pair) -> SearchState:
        part = current()
        assert omega == weight(G, d, part)
        return SearchState(part, omega, trace, pair, len(trace))

    pair = extract_feasible_pair(G, d, current())
    if pair:
        return state(pair)

    while len(trace) < budget:
        bad1 = sorted(u for u in s1 if len(adj[u] & s1) <= a[u])
        bad2 = sorted(v for v in s2 if len(adj[v] & s2) <= b[v] + h[v] - 1)
        applied = None
        for u in bad1:
            delta = len(adj[u] & s2) - len(adj[u] & s1) + a[u] - b[u]
            if delta >= 0:  # omega keeps, |X1| shrinks: potential rises
                s1.discard(u)
                s2.add(u)
                applied = ("m1", u, None, delta)
                break
        if applied is None:
            for v in bad2:
                delta = len(adj[v] & s1) - len(adj[v] & s2) + b[v] - a[v]
                if delta > 0:
                    s2.discard(v)
                    s1.add(v)
                    applied = ("m2", v, None, delta)
                    break
        if applied is None:
            for u in bad1:
                du = len(adj[u] & s2) - len(adj[u] & s1) + a[u] - b[u]
                for v in bad2:
                    dv = len(adj[v] & s1) - len(adj[v] & s2) + b[v] - a[v]
                    delta = du + dv - 2 * (1 if v in adj[u] else 0)
                    if delta > 0 or (delta == 0 and neutral_left > 0):
                        if delta == 0:
                            neutral_left -= 1
                        s1.discard(u)
                        s2.add(u)
                        s2.discard(v)
                        s1.add(v)
                        applied = ("m3", u, v, delta)
                        break
                if applied is not None:
                    break
        if applied is None:
            break  # fixpoint
        omega += applied[3]
        trace.append(applied)
        pair = extract_feasible_pair(G, d, current())
        if pair:
            return state(pair)

    return state(extract_feasible_pair(G, d, current()))


# -- exhaustive oracle ----------------------------------------------------------


def exhaustive_oracle(G: Graph, d: DemandPair, limit: int = 24) -> Optional[Partition]:
    """Ground truth by enumeration of all 2^n - 2 two-sided assignments.
    Returns the first feasible partition in mask order, or None as a
    none-exists certificate. When a = b pointwise, only assignments with
    vertex 0 on side 1 are scanned (the complement is feasible iff the
    assignment is)."""
    n = G.n
    if n > limit:
        raise TooLargeError(n, limit)
    if n < 2:
        return None
    full = (1 << n) - 1
    adj = G.adj_mask
    a, b = d.a, d.b
    symmetric = a == b
    for mask in range(1, full):
        if symmetric and not (mask & 1):
            continue
        comp = full ^ mask
        ok = True
        for u in range(n):
            if (mask >> u) & 1:
                if (adj[u] & mask).bit_count() < a[u]:
                    ok = False
                    break
            elif (adj[u] & comp).bit_count() < b[u]:
                ok = False
                break
        if ok:
            return Partition(set_of(mask), set_of(comp))
    return None


# -- top-level solve --------------------------------------------------------------


def _random_split(n: int, rng: random.Random) -> Partition:
    while True:
        x1 = frozenset(u for u in range(n) if rng.random() < 0.5)
        if 0 < len(x1) < n:
            return Partition(x1, frozenset(range(n)) - x1)


def solve(
    G: Graph, d: DemandPair, kind: PatternKind, config: Optional[SolveConfig] = None
) -> SolveOutcome:
    """Search for a feasible partition: degenerate init plus seeded random
    restarts through the local search, extending any extracted pair; then
    the exhaustive oracle when n is within the configured limit. Every
    returned partition is re-validated."""
    if G.n < 2:
        raise TooSmallError("need at least two vertices to partition")
    config = config or SolveConfig()
    cls = classify(G, kind, config.b3_variant)
    hyp = hypothesis_report(G, d, config.b3_variant)
    rng = random.Random(config.seed)
    stats = SolveStats()
    can_extend = all(len(G.adj[u]) >= d.a[u] + d.b[u] for u in range(G.n))

    partition = None
    for attempt in range(1 + config.restarts):
        if attempt == 0:
            init = degenerate_init(G, d, cls.h, rng)
        else:
            stats.restarts += 1
            init = _random_split(G.n, rng)
        st = local_search(
            G, d, cls.h, init, config.budget, config.allow_neutral_swaps
        )
        stats.moves += st.moves
        if st.pair is None:
            continue
        A, B = st.pair
        if len(A) + len(B) == G.n:
            partition = Partition(A, B)
        elif can_extend:
            partition = extend_pair_to_partition(G, d, A, B)
        else:
            continue  # pair found but not extendable without the degree bound
        stats.local_search_success = True
        break

    if partition is None:
        if G.n <= config.oracle_limit:
            stats.oracle_used = True
            partition = exhaustive_oracle(G, d, config.oracle_limit)
            status = Status.FOUND if partition else Status.NONE_EXISTS
        else:
            status = Status.UNKNOWN
    else:
        status = Status.FOUND

    omega = None
    if partition is not None:
        if not is_feasible_partition(G, partition, d):
            raise InternalInvariantError("solver returned an infeasible partition")
        omega = weight(G, d, partition)
    return SolveOutcome(status, partition, omega, stats, hyp)

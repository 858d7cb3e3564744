"""Seeded random instances: graphs and hypothesis-satisfying demands.

Demand planting works backwards from a target hypothesis: given the
pattern marking h, each vertex gets a split a(u) + b(u) of its degree
budget d(u) - h(u) (exactly, or at most with tight=False) with both parts
at or above the variant's floor. The construction guarantees the
per-vertex degree and floor conditions of the targeted hypothesis; a
vertex whose budget cannot accommodate the floors is unplantable.

Weakening knobs deliberately break the guarantee to mine tightness
witnesses: drop_h ignores the marking in the budget, relax_min lowers
the floors by one.
"""

from __future__ import annotations

import random
from typing import Optional

from .errors import InternalInvariantError, UnplantableError
from .feasibility import DemandPair
from .graph import Graph
from .patterns import (
    Classification,
    PatternKind,
    classify,
    marked_condition_failures,
)

VARIANT_FLOORS = {"main_i": 1, "main_ii": 2, "thmA": 0}


def generate_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi style sample, deterministic per (n, p, seed)."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability {p} outside [0, 1]")
    rng = random.Random(seed)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def plant_demands(
    G: Graph,
    kind: PatternKind,
    variant: str,
    seed: int,
    tight: bool = True,
    weaken: Optional[str] = None,
    classification: Optional[Classification] = None,
    b3_variant: str = "strict",
) -> DemandPair:
    """Sample demands satisfying the degree and floor conditions of the
    given hypothesis variant. variant "thmA" targets the unconditional
    +1 slack (the marking only matters through the solve step there).

    Raises UnplantableError when some vertex admits no valid split."""
    if variant not in VARIANT_FLOORS:
        raise ValueError(f"unknown variant {variant!r}")
    if weaken not in (None, "drop_h", "relax_min"):
        raise ValueError(f"unknown weaken mode {weaken!r}")
    if classification is None:
        classification = classify(G, kind, b3_variant)
    h = classification.h
    rng = random.Random(seed)
    base = VARIANT_FLOORS[variant]
    a_arr, b_arr = [], []
    for u in range(G.n):
        deg = len(G.adj[u])
        slack = 1 if variant == "thmA" else h[u]
        if weaken == "drop_h":
            slack = 0
        floor = max(0, base - h[u])
        if weaken == "relax_min":
            floor = max(0, floor - 1)
        budget = deg - slack
        if budget < 2 * floor or budget < 0:
            raise UnplantableError(
                u, f"degree {deg} cannot fit floors {floor}+{floor} plus slack {slack}"
            )
        total = budget if tight else rng.randint(2 * floor, budget)
        a_val = rng.randint(floor, total - floor)
        a_arr.append(a_val)
        b_arr.append(total - a_val)
    d = DemandPair(tuple(a_arr), tuple(b_arr))
    if weaken is None and variant in ("main_i", "main_ii"):
        bad = marked_condition_failures(G, d, h, base)
        if bad:
            raise InternalInvariantError(
                f"planted demands violate the target hypothesis at {sorted(bad)}"
            )
    return d

"""Verification campaigns: generate, plant, solve, aggregate.

A campaign samples seeded random instances, plants demands for the chosen
hypothesis variant, solves each with the oracle fallback, and aggregates
verdicts. An instance whose (unweakened) hypothesis holds but which
provably has no feasible partition is a violation: either a bug or a
counterexample, and always worth keeping verbatim. Weakened runs instead
collect such instances as tightness witnesses.

Reports are plain dicts of deterministic content (no timing, no
environment), so a fixed config yields a byte-identical canonical JSON
rendering. Instances are solved sequentially; every per-instance seed is
derived from the campaign seed, so the aggregation order is the only
order there is.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Optional

from .errors import UnplantableError
from .generate import generate_graph, plant_demands
from .instances import Instance, serialize_instance
from .patterns import PatternKind, classify
from .solver import SolveConfig, Status, solve

_VARIANT_KIND = {
    "main_i": PatternKind.BOOK_B3,
    "main_ii": PatternKind.K23,
    "thmA": PatternKind.BOOK_B3,
}


@dataclass
class CampaignConfig:
    n_min: int = 5
    n_max: int = 10
    p: float = 0.5
    count: int = 100
    variant: str = "main_i"
    seed: int = 0
    kind: Optional[PatternKind] = None  # default: matches the variant
    oracle_limit: int = 24
    tight: bool = True
    weaken: Optional[str] = None
    restarts: int = 2
    budget: Optional[int] = None
    b3_variant: str = "strict"

    def resolved_kind(self) -> PatternKind:
        return self.kind if self.kind is not None else _VARIANT_KIND[self.variant]

    def to_dict(self) -> dict:
        return {
            "n_min": self.n_min,
            "n_max": self.n_max,
            "p": self.p,
            "count": self.count,
            "variant": self.variant,
            "seed": self.seed,
            "kind": self.resolved_kind().value,
            "oracle_limit": self.oracle_limit,
            "tight": self.tight,
            "weaken": self.weaken,
            "restarts": self.restarts,
            "budget": self.budget,
            "b3_variant": self.b3_variant,
        }


def _hypothesis_holds(outcome, variant: str) -> bool:
    hyp = outcome.hypothesis
    if variant == "main_i":
        return hyp.main_i.holds
    if variant == "main_ii":
        return hyp.main_ii.holds
    return hyp.a.holds


def run_campaign(cfg: CampaignConfig) -> dict:
    """Run the campaign and return the report dict. Per-instance errors
    other than unplantable demands propagate (they indicate bugs, not bad
    luck)."""
    kind = cfg.resolved_kind()
    master = random.Random(cfg.seed)
    instance_seeds = [master.randrange(2**32) for _ in range(cfg.count)]

    planted = unplantable = holds = found = none_exists = unknown = 0
    ls_only = 0
    violations: list = []
    witnesses: list = []

    for index, inst_seed in enumerate(instance_seeds):
        rng = random.Random(inst_seed)
        n = rng.randint(cfg.n_min, cfg.n_max)
        G = generate_graph(n, cfg.p, rng.randrange(2**32))
        cls = classify(G, kind, cfg.b3_variant)
        try:
            demands = plant_demands(
                G,
                kind,
                cfg.variant,
                rng.randrange(2**32),
                tight=cfg.tight,
                weaken=cfg.weaken,
                classification=cls,
                b3_variant=cfg.b3_variant,
            )
        except UnplantableError:
            unplantable += 1
            continue
        planted += 1
        outcome = solve(
            G,
            demands,
            kind,
            SolveConfig(
                seed=rng.randrange(2**32),
                restarts=cfg.restarts,
                budget=cfg.budget,
                oracle_limit=cfg.oracle_limit,
                b3_variant=cfg.b3_variant,
            ),
        )
        hyp_ok = _hypothesis_holds(outcome, cfg.variant)
        if hyp_ok:
            holds += 1
        if outcome.status == Status.FOUND:
            found += 1
            if not outcome.stats.oracle_used:
                ls_only += 1
        elif outcome.status == Status.NONE_EXISTS:
            none_exists += 1
            record = {
                "index": index,
                "seed": inst_seed,
                "instance": serialize_instance(Instance.from_parts(G, demands)),
            }
            if hyp_ok:
                violations.append(record)
            elif cfg.weaken is not None:
                witnesses.append(record)
        else:
            unknown += 1

    rate = ls_only / found if found else None
    return {
        "config": cfg.to_dict(),
        "instances": cfg.count,
        "planted": planted,
        "unplantable": unplantable,
        "hypothesis_holds": holds,
        "found": found,
        "none_exists": none_exists,
        "unknown": unknown,
        "local_search_only_success_rate": rate,
        "violations": violations,
        "witnesses": witnesses,
    }


def report_json(report: dict) -> str:
    """Canonical rendering; identical configs give identical bytes."""
    return json.dumps(report, sort_keys=True, indent=2) + "\n"

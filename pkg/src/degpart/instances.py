"""Line-oriented instance files and outcome serialization.

Format (one directive per line, `#` lines are comments):

    p <n>                vertex count, required, must come first
    e <u> <v>            edge; labels are arbitrary strings, remapped to
                         dense ids 0..n-1 in first-seen order
    d <u>|* <a> <b>      demands for one vertex, or all (`*`); later lines
                         override earlier ones

Duplicate edges are collapsed with a warning in meta; self-loops and
unknown directives are hard parse errors. Serialization is canonical:
all demand lines first (in id order, which pins the label remap), then
sorted edges, so parse(serialize(x)) is the identity and
serialize(parse(s)) is byte-stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .errors import MissingDemandsError, ParseError
from .feasibility import DemandPair
from .graph import Graph
from .solver import SolveOutcome


@dataclass
class Instance:
    graph: Graph
    demands: DemandPair
    labels: tuple  # id -> external label
    meta: dict = field(default_factory=dict)

    @property
    def label_to_id(self) -> dict:
        return {lab: i for i, lab in enumerate(self.labels)}

    @classmethod
    def from_parts(cls, graph: Graph, demands: DemandPair) -> "Instance":
        return cls(graph, demands, tuple(str(i) for i in range(graph.n)))


def parse_instance(
    text: str,
    default_demands: Optional[tuple] = None,
    require_demands: bool = True,
) -> Instance:
    """Parse instance text. default_demands, when given, is a (a, b) pair
    applied to vertices no `d` line covers. With require_demands=False,
    uncovered vertices fall back to (0, 0) silently (used by analyses that
    ignore demands)."""
    n: Optional[int] = None
    labels: list = []
    label_ids: dict = {}
    edges: list = []
    seen_edges: set = set()
    demand_lines: list = []  # (line_no, label-or-*, a, b)
    warnings: list = []

    def vertex_id(token: str, line_no: int) -> int:
        if token in label_ids:
            return label_ids[token]
        if len(labels) >= n:
            raise ParseError(
                line_no, f"label {token!r} exceeds declared vertex count {n}"
            )
        label_ids[token] = len(labels)
        labels.append(token)
        return label_ids[token]

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        directive, args = tokens[0], tokens[1:]
        if directive == "p":
            if n is not None:
                raise ParseError(line_no, "duplicate p line")
            if len(args) != 1:
                raise ParseError(line_no, "p expects one argument")
            try:
                n = int(args[0])
            except ValueError:
                raise ParseError(line_no, f"bad vertex count {args[0]!r}") from None
            if n < 0:
                raise ParseError(line_no, "vertex count must be non-negative")
        elif directive == "e":
            if n is None:
                raise ParseError(line_no, "e line before p line")
            if len(args) != 2:
                raise ParseError(line_no, "e expects two arguments")
            u = vertex_id(args[0], line_no)
            v = vertex_id(args[1], line_no)
            if u == v:
                raise ParseError(line_no, f"self-loop at {args[0]!r}")
            key = (min(u, v), max(u, v))
            if key in seen_edges:
                warnings.append(f"line {line_no}: duplicate edge {args[0]} {args[1]}")
            else:
                seen_edges.add(key)
                edges.append(key)
        elif directive == "d":
            if n is None:
                raise ParseError(line_no, "d line before p line")
            if len(args) != 3:
                raise ParseError(line_no, "d expects three arguments")
            try:
                a_val, b_val = int(args[1]), int(args[2])
            except ValueError:
                raise ParseError(line_no, "demands must be integers") from None
            if a_val < 0 or b_val < 0:
                raise ParseError(line_no, "demands must be non-negative")
            if args[0] == "*":
                demand_lines.append((line_no, None, a_val, b_val))
            else:
                demand_lines.append(
                    (line_no, vertex_id(args[0], line_no), a_val, b_val)
                )
        else:
            raise ParseError(line_no, f"unknown directive {directive!r}")

    if n is None:
        raise ParseError(0, "missing p line")

    # back-fill labels for vertices never named
    used = set(labels)
    for i in range(len(labels), n):
        candidate = str(i)
        while candidate in used:
            candidate = "_" + candidate
        labels.append(candidate)
        used.add(candidate)

    a_arr: list = [None] * n
    b_arr: list = [None] * n
    for _, target, a_val, b_val in demand_lines:
        if target is None:
            a_arr = [a_val] * n
            b_arr = [b_val] * n
        else:
            a_arr[target] = a_val
            b_arr[target] = b_val

    missing = [i for i in range(n) if a_arr[i] is None]
    if missing:
        if default_demands is not None:
            for i in missing:
                a_arr[i], b_arr[i] = default_demands
        elif require_demands:
            raise MissingDemandsError(
                f"no demands for vertices {[labels[i] for i in missing]}; "
                "add d lines or pass defaults"
            )
        else:
            for i in missing:
                a_arr[i], b_arr[i] = 0, 0

    meta: dict = {}
    if warnings:
        meta["warnings"] = warnings
    return Instance(
        Graph(n, edges),
        DemandPair(tuple(a_arr), tuple(b_arr)),
        tuple(labels),
        meta,
    )


def serialize_instance(inst: Instance) -> str:
    lines = [f"p {inst.graph.n}"]
    for i in range(inst.graph.n):
        lines.append(f"d {inst.labels[i]} {inst.demands.a[i]} {inst.demands.b[i]}")
    for u, v in inst.graph.edges():
        lines.append(f"e {inst.labels[u]} {inst.labels[v]}")
    return "\n".join(lines) + "\n"


# -- outcomes -----------------------------------------------------------------


def outcome_to_dict(o: SolveOutcome) -> dict:
    return {
        "status": o.status.value,
        "x1": sorted(o.partition.x1) if o.partition else None,
        "x2": sorted(o.partition.x2) if o.partition else None,
        "omega": o.omega,
        "hypotheses": o.hypothesis.as_bools(),
        "stats": o.stats.to_dict(),
    }


def render_outcome_text(d: dict) -> str:
    hyp = " ".join(f"{k}={str(v).lower()}" for k, v in d["hypotheses"].items())
    stats = " ".join(f"{k}={str(v).lower()}" for k, v in d["stats"].items())
    lines = [f"status: {d['status']}"]
    if d["x1"] is not None:
        lines.append("x1: " + " ".join(map(str, d["x1"])))
        lines.append("x2: " + " ".join(map(str, d["x2"])))
        lines.append(f"omega: {d['omega']}")
    lines.append(f"hypotheses: {hyp}")
    lines.append(f"stats: {stats}")
    return "\n".join(lines) + "\n"


def serialize_outcome(o: SolveOutcome, format: str = "json") -> str:
    """Deterministic rendering of a solve outcome."""
    d = outcome_to_dict(o)
    if format == "json":
        return json.dumps(d, sort_keys=True)
    if format == "text":
        return render_outcome_text(d)
    raise ValueError(f"unknown format {format!r}")

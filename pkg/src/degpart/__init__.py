"""Degree-constrained vertex bipartitions: feasibility, detection, search."""

__version__ = "0.1.0"

from .feasibility import (
    DemandPair,
    Partition,
    bad_vertices,
    extend_pair_to_partition,
    f_core,
    is_degenerate_set,
    is_feasible_pair,
    is_feasible_partition,
    is_good,
    is_meager,
    is_nice,
)
from .graph import Graph, build_graph
from .patterns import (
    Classification,
    HypothesisReport,
    PatternKind,
    classify,
    classify_book_b3,
    classify_k23,
    contains_pattern_at,
    hypothesis_report,
    s1_vertices,
)
from .solver import (
    SolveConfig,
    SolveOutcome,
    Status,
    degenerate_init,
    delta_move,
    delta_swap,
    exhaustive_oracle,
    extract_feasible_pair,
    local_search,
    solve,
    weight,
)

__all__ = [
    "Classification",
    "DemandPair",
    "Graph",
    "HypothesisReport",
    "Partition",
    "PatternKind",
    "SolveConfig",
    "SolveOutcome",
    "Status",
    "bad_vertices",
    "build_graph",
    "classify",
    "classify_book_b3",
    "classify_k23",
    "contains_pattern_at",
    "degenerate_init",
    "delta_move",
    "delta_swap",
    "exhaustive_oracle",
    "extend_pair_to_partition",
    "extract_feasible_pair",
    "f_core",
    "hypothesis_report",
    "is_degenerate_set",
    "is_feasible_pair",
    "is_feasible_partition",
    "is_good",
    "is_meager",
    "is_nice",
    "local_search",
    "s1_vertices",
    "solve",
    "weight",
]

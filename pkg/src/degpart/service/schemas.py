"""Request/response models for the HTTP API."""

from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field


class InstanceRequest(BaseModel):
    instance: str
    default_a: Optional[int] = None
    default_b: Optional[int] = None


class ClassifyRequest(InstanceRequest):
    pattern: Literal["b3", "k23", "s1"] = "b3"
    b3_variant: Literal["strict", "loose"] = "strict"


class ClassifyResponse(BaseModel):
    pattern: str
    vertices: List[int]
    labels: List[str]
    h: Optional[List[int]] = None  # absent for s1


class TheoremResult(BaseModel):
    holds: bool
    failing: List[int]
    reason: str


class CheckRequest(InstanceRequest):
    b3_variant: Literal["strict", "loose"] = "strict"


class CheckResponse(BaseModel):
    n: int
    n_at_least_5: bool
    A: TheoremResult
    B: TheoremResult
    C: TheoremResult
    D: TheoremResult
    main_i: TheoremResult
    main_ii: TheoremResult


class SolveRequest(InstanceRequest):
    pattern: Literal["b3", "k23"] = "b3"
    seed: int = 0
    restarts: int = 8
    budget: Optional[int] = None
    oracle_limit: int = 24
    allow_neutral_swaps: int = 0
    b3_variant: Literal["strict", "loose"] = "strict"


class SolveStatsModel(BaseModel):
    moves: int
    restarts: int
    oracle_used: bool


class SolveResponse(BaseModel):
    status: Literal["found", "none", "unknown"]
    x1: Optional[List[int]]
    x2: Optional[List[int]]
    omega: Optional[int]
    hypotheses: Dict[str, bool]
    stats: SolveStatsModel


class OracleRequest(InstanceRequest):
    oracle_limit: int = 24


class OracleResponse(BaseModel):
    status: Literal["found", "none"]
    x1: Optional[List[int]]
    x2: Optional[List[int]]


class VerifyRequest(BaseModel):
    n_min: int = 5
    n_max: int = 10
    p: float = 0.5
    count: int = 100
    variant: Literal["main_i", "main_ii", "thmA"] = "main_i"
    seed: int = 0
    pattern: Optional[Literal["b3", "k23"]] = None  # default follows variant
    oracle_limit: int = 24
    tight: bool = True
    restarts: int = 2
    budget: Optional[int] = None
    b3_variant: Literal["strict", "loose"] = "strict"


class MineRequest(VerifyRequest):
    weaken: Literal["drop_h", "relax_min"] = "drop_h"


class CampaignResponse(BaseModel):
    report: Dict = Field(description="campaign report; canonical JSON client-side")


class HealthResponse(BaseModel):
    status: str
    version: str

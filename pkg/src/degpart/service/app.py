"""HTTP service wrapping the solver package.

All endpoints are synchronous: the work is CPU-bound and the service is
meant for interactive desk-scale instances and campaigns. Input problems
(parse errors, missing demands, out-of-range sizes) map to 400; a failed
internal validation maps to 500.
"""

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..campaign import CampaignConfig, run_campaign
from ..errors import DegpartError, InternalInvariantError
from ..instances import Instance, outcome_to_dict, parse_instance
from ..patterns import PatternKind, classify, hypothesis_report, s1_vertices
from ..solver import SolveConfig, Status, exhaustive_oracle, solve
from . import schemas

app = FastAPI(
    title="degpart",
    version=__version__,
    description="Degree-constrained vertex bipartitions: classify, check, solve, verify.",
)


@app.exception_handler(DegpartError)
async def _input_error(request: Request, exc: DegpartError) -> JSONResponse:
    status = 500 if isinstance(exc, InternalInvariantError) else 400
    return JSONResponse(
        status_code=status,
        content={"detail": str(exc), "error": type(exc).__name__},
    )


def _instance(req: schemas.InstanceRequest, require_demands: bool = True) -> Instance:
    default = None
    if req.default_a is not None and req.default_b is not None:
        default = (req.default_a, req.default_b)
    return parse_instance(req.instance, default, require_demands)


@app.get("/health", response_model=schemas.HealthResponse)
def health() -> schemas.HealthResponse:
    return schemas.HealthResponse(status="ok", version=__version__)


@app.post("/classify", response_model=schemas.ClassifyResponse)
def classify_endpoint(req: schemas.ClassifyRequest) -> schemas.ClassifyResponse:
    inst = _instance(req, require_demands=False)
    if req.pattern == "s1":
        vertices = sorted(s1_vertices(inst.graph))
        h = None
    else:
        cls = classify(inst.graph, PatternKind(req.pattern), req.b3_variant)
        vertices = sorted(cls.t1)
        h = list(cls.h)
    return schemas.ClassifyResponse(
        pattern=req.pattern,
        vertices=vertices,
        labels=[inst.labels[u] for u in vertices],
        h=h,
    )


@app.post("/check", response_model=schemas.CheckResponse)
def check_endpoint(req: schemas.CheckRequest) -> schemas.CheckResponse:
    inst = _instance(req)
    report = hypothesis_report(inst.graph, inst.demands, req.b3_variant)
    d = report.to_dict()
    return schemas.CheckResponse(
        n=inst.graph.n,
        n_at_least_5=d.pop("n_at_least_5"),
        **{key: schemas.TheoremResult(**val) for key, val in d.items()},
    )


@app.post("/solve", response_model=schemas.SolveResponse)
def solve_endpoint(req: schemas.SolveRequest) -> schemas.SolveResponse:
    inst = _instance(req)
    outcome = solve(
        inst.graph,
        inst.demands,
        PatternKind(req.pattern),
        SolveConfig(
            seed=req.seed,
            restarts=req.restarts,
            budget=req.budget,
            oracle_limit=req.oracle_limit,
            allow_neutral_swaps=req.allow_neutral_swaps,
            b3_variant=req.b3_variant,
        ),
    )
    return schemas.SolveResponse(**outcome_to_dict(outcome))


@app.post("/oracle", response_model=schemas.OracleResponse)
def oracle_endpoint(req: schemas.OracleRequest) -> schemas.OracleResponse:
    inst = _instance(req)
    partition = exhaustive_oracle(inst.graph, inst.demands, req.oracle_limit)
    if partition is None:
        return schemas.OracleResponse(status=Status.NONE_EXISTS.value, x1=None, x2=None)
    return schemas.OracleResponse(
        status=Status.FOUND.value,
        x1=sorted(partition.x1),
        x2=sorted(partition.x2),
    )


def _campaign_config(req: schemas.VerifyRequest, weaken=None) -> CampaignConfig:
    return CampaignConfig(
        n_min=req.n_min,
        n_max=req.n_max,
        p=req.p,
        count=req.count,
        variant=req.variant,
        seed=req.seed,
        kind=PatternKind(req.pattern) if req.pattern else None,
        oracle_limit=req.oracle_limit,
        tight=req.tight,
        weaken=weaken,
        restarts=req.restarts,
        budget=req.budget,
        b3_variant=req.b3_variant,
    )


@app.post("/verify", response_model=schemas.CampaignResponse)
def verify_endpoint(req: schemas.VerifyRequest) -> schemas.CampaignResponse:
    return schemas.CampaignResponse(report=run_campaign(_campaign_config(req)))


@app.post("/mine", response_model=schemas.CampaignResponse)
def mine_endpoint(req: schemas.MineRequest) -> schemas.CampaignResponse:
    return schemas.CampaignResponse(
        report=run_campaign(_campaign_config(req, weaken=req.weaken))
    )

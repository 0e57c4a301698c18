"""FastAPI application wrapping the core package.

Every handler is a plain function taking one request model and returning
one response model, so the CLI can invoke them in process; over HTTP the
same functions are mounted under /v1.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import DomainError, TheoremViolationError
from ..gamma import classify, solve_brute
from ..pattern import compute_Mk, detect_period, g_polynomial, run_length
from ..sequences import SequenceSpec, delta_records
from ..density import density_scan, even_checkpoints
from ..arith import theta as theta_fn
from . import schemas as sc


def gamma_endpoint(req: sc.GammaRequest) -> sc.GammaResponse:
    cls = classify(req.a, req.b)
    solution = None
    if req.solve:
        solutions = solve_brute(cls.reduced.a_red, cls.reduced.b_red)
        if len(solutions) != 1:
            raise TheoremViolationError(
                "pair (%d, %d) has %d solutions" % (req.a, req.b, len(solutions))
            )
        if int(solutions[0].tag) != int(cls.tag):
            raise TheoremViolationError(
                "criterion tag %d disagrees with enumerated tag %d for (%d, %d)"
                % (int(cls.tag), int(solutions[0].tag), req.a, req.b)
            )
        solution = sc.SolutionModel.from_solution(solutions[0])
    return sc.GammaResponse(
        a=req.a,
        b=req.b,
        gamma=int(cls.tag),
        reduced_a=cls.reduced.a_red,
        reduced_b=cls.reduced.b_red,
        common_divisor=cls.reduced.d,
        branch=cls.branch,
        theta=cls.theta_used,
        solution=solution,
    )


def theta_endpoint(req: sc.ThetaRequest) -> sc.ThetaResponse:
    return sc.ThetaResponse(a=req.a, b=req.b, theta=theta_fn(req.a, req.b))


def delta_endpoint(req: sc.DeltaRequest) -> sc.DeltaResponse:
    spec = SequenceSpec(
        family=req.family, k=req.k, a=req.a, b=req.b, r=req.r, terms=req.terms
    )
    records = delta_records(spec, req.start, req.count)
    runs = None
    if req.include_runs:
        runs = [sc.RunModel.from_run(r) for r in run_length([rec.tag for rec in records])]
    return sc.DeltaResponse(
        family=spec.family.value,
        start=req.start,
        count=req.count,
        records=[sc.DeltaRecordModel.from_record(r) for r in records],
        runs=runs,
    )


def period_endpoint(req: sc.PeriodRequest) -> sc.PeriodResponse:
    return sc.PeriodResponse.from_report(detect_period(req.k, req.window))


def mk_endpoint(req: sc.MkRequest) -> sc.MkResponse:
    return sc.MkResponse(k=req.k, m_k=compute_Mk(req.k), g_coefficients=g_polynomial(req.k))


def density_endpoint(req: sc.DensityRequest) -> sc.DensityResponse:
    checkpoints = even_checkpoints(req.x_max, req.samples)
    samples = density_scan(req.x_max, checkpoints, coprime_only=req.coprime, jobs=req.jobs)
    models = [sc.DensitySampleModel.from_sample(s) for s in samples]
    return sc.DensityResponse(
        x_max=req.x_max, coprime=req.coprime, samples=models, final_ratio=models[-1].ratio
    )


def verify_endpoint(req: sc.VerifyRequest) -> sc.VerifyResponse:
    from ..gamma import verify_criterion_oracle, verify_exactly_one

    uniq = verify_exactly_one(req.limit, jobs=req.jobs)
    equiv = verify_criterion_oracle(req.limit, jobs=req.jobs)
    return sc.VerifyResponse.from_reports(uniq, equiv)


def health_endpoint() -> sc.HealthResponse:
    return sc.HealthResponse(status="ok", version=__version__)


# path -> (handler, request model); the CLI dispatches through this table too
ROUTES = {
    "/v1/gamma": (gamma_endpoint, sc.GammaRequest),
    "/v1/theta": (theta_endpoint, sc.ThetaRequest),
    "/v1/delta": (delta_endpoint, sc.DeltaRequest),
    "/v1/period": (period_endpoint, sc.PeriodRequest),
    "/v1/mk": (mk_endpoint, sc.MkRequest),
    "/v1/density": (density_endpoint, sc.DensityRequest),
    "/v1/verify": (verify_endpoint, sc.VerifyRequest),
}


def create_app() -> FastAPI:
    app = FastAPI(title="diopair", version=__version__)

    @app.exception_handler(DomainError)
    async def _domain_error(_: Request, exc: DomainError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"detail": str(exc), "kind": "domain"})

    @app.exception_handler(TheoremViolationError)
    async def _violation(_: Request, exc: TheoremViolationError) -> JSONResponse:
        return JSONResponse(
            status_code=500, content={"detail": str(exc), "kind": "theorem-violation"}
        )

    app.get("/v1/health", response_model=sc.HealthResponse)(health_endpoint)
    for path, (handler, _req) in ROUTES.items():
        app.post(path)(handler)
    return app


app = create_app()

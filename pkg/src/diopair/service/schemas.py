"""Request/response models for the service; the CLI shares these verbatim."""

from __future__ import annotations

from pydantic import BaseModel, Field

from ..density import DensitySample
from ..gamma import EquationSolution, EquivalenceReport, UniquenessReport
from ..pattern import PeriodReport, Run
from ..sequences import DeltaRecord


class GammaRequest(BaseModel):
    a: int = Field(ge=1)
    b: int = Field(ge=1)
    solve: bool = False


class SolutionModel(BaseModel):
    equation: int
    x: int
    y: int

    @classmethod
    def from_solution(cls, s: EquationSolution) -> "SolutionModel":
        return cls(equation=int(s.tag), x=s.x, y=s.y)


class GammaResponse(BaseModel):
    a: int
    b: int
    gamma: int
    reduced_a: int
    reduced_b: int
    common_divisor: int
    branch: str
    theta: int | None = None
    solution: SolutionModel | None = None


class ThetaRequest(BaseModel):
    a: int = Field(ge=1)
    b: int = Field(ge=1)


class ThetaResponse(BaseModel):
    a: int
    b: int
    theta: int


class DeltaRequest(BaseModel):
    family: str
    k: int | None = Field(default=None, ge=1)
    a: int | None = Field(default=None, ge=1)
    b: int | None = Field(default=None, ge=1)
    r: int | None = Field(default=None, ge=1)
    terms: list[int] | None = None
    start: int = Field(default=1, ge=1)
    count: int = Field(default=1, ge=1)
    include_runs: bool = False


class DeltaRecordModel(BaseModel):
    n: int
    term: int
    next_term: int
    gcd: int
    gamma: int

    @classmethod
    def from_record(cls, rec: DeltaRecord) -> "DeltaRecordModel":
        return cls(
            n=rec.n, term=rec.term, next_term=rec.next_term, gcd=rec.gcd, gamma=int(rec.tag)
        )


class RunModel(BaseModel):
    tag: int
    length: int

    @classmethod
    def from_run(cls, run: Run) -> "RunModel":
        return cls(tag=run.tag, length=run.length)


class DeltaResponse(BaseModel):
    family: str
    start: int
    count: int
    records: list[DeltaRecordModel]
    runs: list[RunModel] | None = None


class PeriodRequest(BaseModel):
    k: int = Field(ge=1)
    window: int | None = Field(default=None, ge=1)


class PeriodResponse(BaseModel):
    k: int
    period: int
    ones_per_period: int
    twos_per_period: int
    witness: list[int]
    window_used: int

    @classmethod
    def from_report(cls, rep: PeriodReport) -> "PeriodResponse":
        return cls(
            k=rep.k,
            period=rep.period,
            ones_per_period=rep.ones_per_period,
            twos_per_period=rep.twos_per_period,
            witness=list(rep.witness),
            window_used=rep.window_used,
        )


class MkRequest(BaseModel):
    k: int = Field(ge=1)


class MkResponse(BaseModel):
    k: int
    m_k: int
    g_coefficients: list[int]


class DensityRequest(BaseModel):
    x_max: int = Field(ge=1)
    samples: int = Field(default=1, ge=1)
    coprime: bool = False
    jobs: int = Field(default=1, ge=1)


class DensitySampleModel(BaseModel):
    x: int
    total_pairs: int
    gamma1_pairs: int
    ratio: str
    reduced_gamma1_pairs: int
    total_pairs_offdiag: int
    gamma1_pairs_offdiag: int
    reduced_gamma1_pairs_offdiag: int

    @classmethod
    def from_sample(cls, s: DensitySample) -> "DensitySampleModel":
        return cls(
            x=s.x,
            total_pairs=s.total_pairs,
            gamma1_pairs=s.gamma1_pairs,
            ratio=s.ratio_decimal(),
            reduced_gamma1_pairs=s.reduced_gamma1_pairs,
            total_pairs_offdiag=s.total_pairs_offdiag,
            gamma1_pairs_offdiag=s.gamma1_pairs_offdiag,
            reduced_gamma1_pairs_offdiag=s.reduced_gamma1_pairs_offdiag,
        )

    def to_sample(self) -> DensitySample:
        return DensitySample(
            x=self.x,
            total_pairs=self.total_pairs,
            gamma1_pairs=self.gamma1_pairs,
            reduced_gamma1_pairs=self.reduced_gamma1_pairs,
            total_pairs_offdiag=self.total_pairs_offdiag,
            gamma1_pairs_offdiag=self.gamma1_pairs_offdiag,
            reduced_gamma1_pairs_offdiag=self.reduced_gamma1_pairs_offdiag,
        )


class DensityResponse(BaseModel):
    x_max: int
    coprime: bool
    samples: list[DensitySampleModel]
    final_ratio: str


class VerifyRequest(BaseModel):
    limit: int = Field(ge=2)
    jobs: int = Field(default=1, ge=1)


class UniquenessCounterexampleModel(BaseModel):
    a: int
    b: int
    solutions: list[SolutionModel]


class EquivalenceMismatchModel(BaseModel):
    a: int
    b: int
    criterion: int
    oracle: int


class VerifyResponse(BaseModel):
    limit: int
    uniqueness_pairs_checked: int
    uniqueness_counterexamples: list[UniquenessCounterexampleModel]
    equivalence_pairs_checked: int
    equivalence_mismatches: list[EquivalenceMismatchModel]
    ok: bool

    @classmethod
    def from_reports(
        cls, uniq: UniquenessReport, equiv: EquivalenceReport
    ) -> "VerifyResponse":
        return cls(
            limit=uniq.limit,
            uniqueness_pairs_checked=uniq.pairs_checked,
            uniqueness_counterexamples=[
                UniquenessCounterexampleModel(
                    a=c.a,
                    b=c.b,
                    solutions=[SolutionModel.from_solution(s) for s in c.solutions],
                )
                for c in uniq.counterexamples
            ],
            equivalence_pairs_checked=equiv.pairs_checked,
            equivalence_mismatches=[
                EquivalenceMismatchModel(
                    a=m.a, b=m.b, criterion=int(m.criterion), oracle=int(m.oracle)
                )
                for m in equiv.mismatches
            ],
            ok=uniq.ok and equiv.ok,
        )


class HealthResponse(BaseModel):
    status: str
    version: str

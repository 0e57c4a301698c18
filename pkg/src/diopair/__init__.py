"""diopair: which of a complementary pair of linear Diophantine equations
does a pair of naturals solve, and what patterns do the answers trace along
integer sequences?"""

from .arith import ReducedPair, gcd, mod_inverse, reduce, theta
from .density import DensitySample, density_scan, emit_csv, emit_svg, even_checkpoints, render_ratio
from .errors import DomainError, TheoremViolationError
from .gamma import (
    EquationSolution,
    EquationTag,
    EquivalenceReport,
    GammaClassification,
    UniquenessReport,
    classify,
    equation_target,
    gamma_criterion,
    gamma_of_reduced,
    gamma_oracle,
    solve_brute,
    verify_criterion_oracle,
    verify_exactly_one,
)
from .pattern import (
    PeriodReport,
    Run,
    alternation_onset,
    compute_Mk,
    detect_period,
    g_polynomial,
    gamma_fixed_k,
    run_length,
)
from .sequences import (
    DeltaRecord,
    Family,
    SequenceSpec,
    delta,
    delta_records,
    gcd_consecutive,
    load_explicit,
    term,
)

__version__ = "0.1.0"

__all__ = [
    "DeltaRecord",
    "DensitySample",
    "DomainError",
    "EquationSolution",
    "EquationTag",
    "EquivalenceReport",
    "Family",
    "GammaClassification",
    "PeriodReport",
    "ReducedPair",
    "Run",
    "SequenceSpec",
    "TheoremViolationError",
    "UniquenessReport",
    "__version__",
    "alternation_onset",
    "classify",
    "compute_Mk",
    "delta",
    "delta_records",
    "density_scan",
    "detect_period",
    "emit_csv",
    "equation_target",
    "emit_svg",
    "even_checkpoints",
    "g_polynomial",
    "gamma_criterion",
    "gamma_fixed_k",
    "gamma_of_reduced",
    "gamma_oracle",
    "gcd",
    "gcd_consecutive",
    "load_explicit",
    "mod_inverse",
    "reduce",
    "render_ratio",
    "run_length",
    "solve_brute",
    "term",
    "theta",
    "verify_criterion_oracle",
    "verify_exactly_one",
]

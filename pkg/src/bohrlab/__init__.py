"""Numerical laboratory for Bohr-type majorant inequalities on finite
complex matrices: alpha series, critical radii, hypothesis checks,
extremal witnesses, radius search, and the classical scalar case."""

from .hypotheses import (
    ConditionReport,
    HypothesisReport,
    PreconditionViolatedError,
    RELAXED_CONDITIONS,
    THEOREM_CONDITIONS,
    check_hypotheses,
    check_relaxed_hypotheses,
    check_theorem_hypotheses,
    orthogonality_check,
)
from .linalg import (
    DEFAULT_TOL,
    NotHermitianError,
    adjoint,
    as_complex_matrix,
    frobenius_norm,
    hermitian_eigensystem,
    hermitian_eigenvalues,
    is_strictly_upper,
    is_upper,
    loewner_leq,
    max_abs,
    operator_norm,
    re_part,
    singular_values,
    trace_norm,
    trace_pairing,
)
from .scalar import (
    ClassicalCheck,
    CoeffSeries,
    classical_verify,
    crossing_radius,
    moebius_series,
    scalar_bohr_sum,
    sup_norm_estimate,
)
from .search import (
    BadLengthError,
    NotContractionError,
    NotPSDError,
    Parameterization,
    RadiusEstimate,
    SearchConfig,
    calculus_claim_oracle,
    dimension,
    materialize,
    objective,
    parameterize,
    search,
)
from .series import (
    AlphaSeries,
    BohrInstance,
    BudgetBelowAlpha0Error,
    InequalityCheck,
    NegativeTraceError,
    NonrealTraceError,
    RadiusOutOfRangeError,
    SequenceSpec,
    alpha_series,
    bohr_sum,
    check_inequality,
    critical_radius,
)
from .witnesses import (
    FAMILY_IDS,
    InvalidOrderError,
    RadiusNotAboveOneThirdError,
    ShrinkNotAllowedError,
    WitnessFamily,
    embed,
    general_witness,
    remark_parameters,
    remark_two_witness,
    three_by_three_witness,
)

__all__ = [
    "AlphaSeries",
    "BadLengthError",
    "BohrInstance",
    "BudgetBelowAlpha0Error",
    "ClassicalCheck",
    "CoeffSeries",
    "ConditionReport",
    "DEFAULT_TOL",
    "FAMILY_IDS",
    "HypothesisReport",
    "InequalityCheck",
    "InvalidOrderError",
    "NegativeTraceError",
    "NonrealTraceError",
    "NotContractionError",
    "NotHermitianError",
    "NotPSDError",
    "Parameterization",
    "PreconditionViolatedError",
    "RELAXED_CONDITIONS",
    "RadiusEstimate",
    "RadiusNotAboveOneThirdError",
    "RadiusOutOfRangeError",
    "SearchConfig",
    "SequenceSpec",
    "ShrinkNotAllowedError",
    "THEOREM_CONDITIONS",
    "WitnessFamily",
    "adjoint",
    "alpha_series",
    "as_complex_matrix",
    "bohr_sum",
    "calculus_claim_oracle",
    "check_hypotheses",
    "check_inequality",
    "check_relaxed_hypotheses",
    "check_theorem_hypotheses",
    "classical_verify",
    "critical_radius",
    "crossing_radius",
    "dimension",
    "embed",
    "frobenius_norm",
    "general_witness",
    "hermitian_eigensystem",
    "hermitian_eigenvalues",
    "is_strictly_upper",
    "is_upper",
    "loewner_leq",
    "materialize",
    "max_abs",
    "moebius_series",
    "objective",
    "operator_norm",
    "orthogonality_check",
    "parameterize",
    "re_part",
    "remark_parameters",
    "remark_two_witness",
    "scalar_bohr_sum",
    "search",
    "singular_values",
    "sup_norm_estimate",
    "three_by_three_witness",
    "trace_norm",
    "trace_pairing",
]

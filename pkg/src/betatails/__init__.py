"""Exact central moments and sharp Bernstein-type tail bounds for the Beta distribution."""

from .bounds import (
    SubGammaParams,
    TailSide,
    bernstein_tail_bound,
    exact_tail,
    log_upper_bound,
    sub_gamma_bound,
    subgaussian_bound,
    subgaussian_optimal_proxy,
    sub_gamma_params,
)
from .chernoff import (
    ChernoffResult,
    centered_mgf,
    cgf,
    chernoff_exponent_numeric,
    derivative_ratio_check,
    cumulant_upper_bound,
    best_tilt,
    chernoff_exponent_expansion,
)
from .moments import (
    BetaParams,
    MomentTable,
    central_moment_binomial_oracle,
    central_moment_hypergeom_oracle,
    central_moments_recursive,
    raw_moment,
    recursion_coefficients,
    standardized_moment,
)
from .specfun import (
    ConvergenceError,
    DEFAULT_CONFIG,
    EvalConfig,
    gauss_2f1_terminating,
    kummer_1f1,
    log_gamma,
    log_kummer_1f1,
    pochhammer,
    regularized_incomplete_beta,
)

__version__ = "0.1.0"

__all__ = [
    "BetaParams",
    "ChernoffResult",
    "ConvergenceError",
    "DEFAULT_CONFIG",
    "EvalConfig",
    "MomentTable",
    "SubGammaParams",
    "TailSide",
    "bernstein_tail_bound",
    "centered_mgf",
    "central_moment_binomial_oracle",
    "central_moment_hypergeom_oracle",
    "central_moments_recursive",
    "cgf",
    "chernoff_exponent_numeric",
    "derivative_ratio_check",
    "cumulant_upper_bound",
    "exact_tail",
    "gauss_2f1_terminating",
    "kummer_1f1",
    "log_gamma",
    "log_kummer_1f1",
    "log_upper_bound",
    "pochhammer",
    "raw_moment",
    "recursion_coefficients",
    "regularized_incomplete_beta",
    "standardized_moment",
    "sub_gamma_bound",
    "subgaussian_bound",
    "subgaussian_optimal_proxy",
    "best_tilt",
    "sub_gamma_params",
    "chernoff_exponent_expansion",
]

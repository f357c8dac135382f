"""Closed-form tail bounds for Beta(alpha, beta).

The headline bound is the sub-gamma (Bernstein-type) inequality with

    v = Var[X] = alpha beta / ((alpha+beta)^2 (alpha+beta+1))
    c = mu_3 / mu_2 = 2 (beta-alpha) / ((alpha+beta)(alpha+beta+2))

under which the upper tail P{X > E[X] + eps} is at most
exp(-eps^2 / (2(v + c eps / 3))) when beta >= alpha and exp(-eps^2/(2v))
otherwise; lower tails follow by swapping the roles of alpha and beta.
Alongside it: the best sub-gaussian competitor (variational proxy), exact
tails for verification, and the quadratic log refinement used in the
large-deviation optimization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum

from .moments import BetaParams, Scalar
from .specfun import ConvergenceError, DEFAULT_CONFIG, EvalConfig, regularized_incomplete_beta


class TailSide(Enum):
    UPPER = "upper"
    LOWER = "lower"


@dataclass(frozen=True)
class SubGammaParams:
    """Variance proxy v and scale c of the sub-gamma tail shape."""

    v: Scalar
    c: Scalar

    def __post_init__(self):
        if self.v <= 0:
            raise ValueError(f"variance proxy must be positive, got v={self.v}")


def sub_gamma_params(params: BetaParams) -> SubGammaParams:
    """The optimal (v, c): v is the variance, c the third-to-second moment ratio."""
    a, b, s = params.alpha, params.beta, params.total
    v = a * b / (s * s * (s + 1))
    c = 2 * (b - a) / (s * (s + 2))
    return SubGammaParams(v=v, c=c)


def sub_gamma_bound(sg: SubGammaParams, eps: float) -> float:
    """exp(-eps^2 / (2 (v + c eps / 3))), the generic sub-gamma tail value."""
    if eps < 0:
        raise ValueError(f"eps must be non-negative, got {eps}")
    if eps == 0:
        return 1.0
    denom = float(sg.v) + float(sg.c) * eps / 3.0
    if denom <= 0.0:
        raise ValueError(
            f"sub-gamma denominator v + c*eps/3 = {denom} is not positive at eps={eps}"
        )
    return math.exp(-eps * eps / (2.0 * denom))


def bernstein_tail_bound(params: BetaParams, eps: float, side: TailSide) -> float:
    """Bernstein-type bound on P{X > E[X]+eps} (UPPER) or P{X < E[X]-eps} (LOWER).

    Upper side: the sub-gamma shape when beta >= alpha, the pure gaussian
    shape exp(-eps^2/(2v)) when beta < alpha. The lower side is the upper
    side of 1 - X, i.e. the same formulas with alpha and beta exchanged.
    """
    if eps < 0:
        raise ValueError(f"eps must be non-negative, got {eps}")
    if side is TailSide.LOWER:
        return bernstein_tail_bound(params.swapped(), eps, TailSide.UPPER)
    sg = sub_gamma_params(params)
    if params.beta >= params.alpha:
        return sub_gamma_bound(sg, eps)
    if eps == 0:
        return 1.0
    return math.exp(-eps * eps / (2.0 * float(sg.v)))


def exact_tail(
    params: BetaParams, eps: float, side: TailSide, cfg: EvalConfig = DEFAULT_CONFIG
) -> float:
    """Exact tail probability at deviation eps from the mean.

    UPPER gives P{X > mu + eps} = I_{1-mu-eps}(beta, alpha), evaluated in the
    complementary parametrization so no 1 - p cancellation occurs when the
    tail is small. Deviations beyond the support return 0.
    """
    if eps < 0:
        raise ValueError(f"eps must be non-negative, got {eps}")
    a, b = float(params.alpha), float(params.beta)
    mu = a / (a + b)
    if side is TailSide.UPPER:
        u = 1.0 - mu - eps
        if u <= 0.0:
            return 0.0
        return regularized_incomplete_beta(b, a, min(u, 1.0), cfg)
    x = mu - eps
    if x <= 0.0:
        return 0.0
    return regularized_incomplete_beta(a, b, min(x, 1.0), cfg)


def log_upper_bound(x: float) -> float:
    """The quadratic-over-linear refinement x - x^2 / (2 (1 + x/3)).

    At the origin it matches log(1+x) to second order; for x > 0 it lies
    strictly below log(1+x) (the gap x -> log(1+x) - value has derivative
    x^2 (x+9) / (2 (x+1) (x+3)^2) >= 0 and vanishes at 0), which is what the
    Chernoff optimization step consumes.
    """
    return x - x * x / (2.0 * (1.0 + x / 3.0))


# Sub-gaussian proxy optimizer constants. The coarse scan is log-spaced and
# extends geometrically while the objective is still rising at the top end;
# extremely skewed shapes peak at t in the thousands.
_SCAN_POINTS_PER_DECADE = 25
_SCAN_T_MIN = 1e-4
_SCAN_T_MAX_INITIAL = 200.0
_SCAN_T_MAX_CAP = 1e7
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def _proxy_objective(params: BetaParams, t: float, cfg: EvalConfig) -> float:
    """2 psi(t) / t^2, evaluated in whichever form is well conditioned at t.

    Below |t| = 1e-4 the limit series v + c v t / 3 applies. Up to |t| = 4 the
    centered moment series with log1p keeps full relative precision where psi
    is O(t^2) and the -t mu + log 1F1 form would cancel. Beyond that the
    closed 1F1 form takes over (its absolute noise is negligible against
    psi there).
    """
    from .chernoff import _centered_series, _series_length, cgf

    sg = sub_gamma_params(params)
    v, c = float(sg.v), float(sg.c)
    if abs(t) < 1e-4:
        return v + c * v * t / 3.0
    if abs(t) <= 4.0:
        sigma, _ = _centered_series(params, t, _series_length(t))
        return 2.0 * math.log1p(sigma) / (t * t)
    series_cfg = replace(cfg, max_iter=max(cfg.max_iter, int(4 * abs(t)) + 2000))
    return 2.0 * cgf(params, t, series_cfg) / (t * t)


def subgaussian_optimal_proxy(params: BetaParams, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Best sub-gaussian variance proxy: sup over t != 0 of 2 psi(t) / t^2.

    The supremum is taken over both signs of t and always dominates the
    variance v (the t -> 0 limit). Symmetric shapes attain the supremum at
    the limit; skewed shapes attain it at a finite t found by a coarse
    log-spaced scan plus golden-section refinement.
    """
    v = float(sub_gamma_params(params).v)
    best = v
    for sign in (1.0, -1.0):
        t_hi = _SCAN_T_MAX_INITIAL
        while True:
            grid = _log_grid(_SCAN_T_MIN, t_hi)
            values = [_proxy_objective(params, sign * t, cfg) for t in grid]
            idx = max(range(len(grid)), key=values.__getitem__)
            # extend while the maximum sits in the top decade and may keep rising
            if grid[idx] * 10.0 > t_hi and t_hi < _SCAN_T_MAX_CAP:
                t_hi = min(t_hi * 10.0, _SCAN_T_MAX_CAP)
                continue
            break
        if grid[idx] * 10.0 > t_hi:
            raise ConvergenceError(
                f"sub-gaussian proxy objective still rising at |t|={t_hi} for {params}"
            )
        lo = grid[idx - 1] if idx > 0 else grid[0]
        hi = grid[idx + 1]
        refined = _golden_max(lambda t: _proxy_objective(params, sign * t, cfg), lo, hi)
        best = max(best, values[idx], refined)
    return best


def _log_grid(lo: float, hi: float) -> list[float]:
    n = max(2, int(_SCAN_POINTS_PER_DECADE * math.log10(hi / lo)) + 1)
    ratio = math.log(hi / lo)
    return [lo * math.exp(ratio * i / (n - 1)) for i in range(n)]


def _golden_max(f, lo: float, hi: float, rel_tol: float = 1e-6) -> float:
    """Golden-section maximization of a unimodal f on [lo, hi].

    Interval tolerance 1e-6 relative leaves the value within ~1e-12 of the
    peak because the objective is smooth and flat at its maximum.
    """
    x1 = hi - _GOLDEN * (hi - lo)
    x2 = lo + _GOLDEN * (hi - lo)
    f1, f2 = f(x1), f(x2)
    while hi - lo > rel_tol * max(1.0, abs(lo), abs(hi)):
        if f1 < f2:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _GOLDEN * (hi - lo)
            f2 = f(x2)
        else:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _GOLDEN * (hi - lo)
            f1 = f(x1)
    return max(f1, f2)


def subgaussian_bound(
    params: BetaParams,
    eps: float,
    cfg: EvalConfig = DEFAULT_CONFIG,
    *,
    proxy: float | None = None,
) -> float:
    """exp(-eps^2 / (2 sigma^2)) with sigma^2 the optimal sub-gaussian proxy.

    Side-independent. Pass a precomputed proxy to skip the optimization when
    evaluating many deviations for one parameter pair.
    """
    if eps < 0:
        raise ValueError(f"eps must be non-negative, got {eps}")
    sigma2 = subgaussian_optimal_proxy(params, cfg) if proxy is None else proxy
    if eps == 0:
        return 1.0
    return math.exp(-eps * eps / (2.0 * sigma2))

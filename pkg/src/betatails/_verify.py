"""Self-contained invariant suite behind the ``verify`` CLI command.

Every check is a pure function returning None on success or a short failure
description. The quick level trims grids to run in a few seconds; the full
level runs the complete grids. All randomness is seeded, so two runs of the
same level always perform identical work.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from . import bounds, chernoff, moments
from .cli import GridSpec, comparison_rows
from .specfun import (
    DEFAULT_CONFIG,
    gauss_2f1_terminating,
    log_gamma,
    regularized_incomplete_beta,
)

_SEED = 20260810

_MOMENT_PAIRS = [
    (Fraction(1), Fraction(1)),
    (Fraction(2), Fraction(3)),
    (Fraction(1, 2), Fraction(1, 2)),
    (Fraction(2), Fraction(98)),
    (Fraction(7), Fraction(11, 3)),
]
_SOUNDNESS_PAIRS = _MOMENT_PAIRS + [(Fraction(98), Fraction(2))]
_INEQUALITY_PAIRS = [(2, 98), (2, 998), (5, 5), (98, 2), (1, 1), (2, 3)]


def _linspace(lo: float, hi: float, n: int) -> list[float]:
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


def _logspace(lo: float, hi: float, n: int) -> list[float]:
    r = math.log(hi / lo)
    return [lo * math.exp(r * i / (n - 1)) for i in range(n)]


def check_oracle_equivalence(level: str) -> str | None:
    """Recursive moments equal both independent oracles, rationally."""
    dmax = 20 if level == "full" else 8
    pairs = _MOMENT_PAIRS if level == "full" else _MOMENT_PAIRS[:3]
    for a, b in pairs:
        params = moments.BetaParams(a, b)
        table = moments.central_moments_recursive(params, dmax)
        for d in range(dmax + 1):
            mu = table.central[d]
            bin_val = moments.central_moment_binomial_oracle(params, d)
            hyp_val = moments.central_moment_hypergeom_oracle(params, d)
            if not (mu == bin_val == hyp_val):
                return (
                    f"Beta({a},{b}) d={d}: recursion={mu}, binomial={bin_val}, "
                    f"hypergeometric={hyp_val}"
                )
    return None


def check_sign_odd_moments(level: str) -> str | None:
    """Odd central moments share the sign of beta - alpha."""
    rng = random.Random(_SEED)
    n = 50 if level == "full" else 10
    for _ in range(n):
        a = Fraction(rng.randint(1, 40), rng.randint(1, 8))
        b = Fraction(rng.randint(1, 40), rng.randint(1, 8))
        params = moments.BetaParams(a, b)
        table = moments.central_moments_recursive(params, 19)
        expected = (b > a) - (b < a)
        for d in range(3, 20, 2):
            mu = table.central[d]
            got = (mu > 0) - (mu < 0)
            if got != expected:
                return f"Beta({a},{b}) d={d}: sign(mu_d)={got}, sign(beta-alpha)={expected}"
    return None


def check_even_moments_nonnegative(level: str) -> str | None:
    dmax = 20 if level == "full" else 10
    for a, b in _MOMENT_PAIRS:
        table = moments.central_moments_recursive(moments.BetaParams(a, b), dmax)
        for d in range(0, dmax + 1, 2):
            if table.central[d] < 0:
                return f"Beta({a},{b}): mu_{d} = {table.central[d]} < 0"
    return None


def check_moment_boundedness(level: str) -> str | None:
    """|mu_d| <= 1 since the centered variable lives in [-1, 1]."""
    dmax = 20 if level == "full" else 10
    for a, b in _MOMENT_PAIRS:
        table = moments.central_moments_recursive(moments.BetaParams(a, b), dmax)
        for d, mu in enumerate(table.central):
            if abs(mu) > 1:
                return f"Beta({a},{b}): |mu_{d}| = {abs(mu)} > 1"
    return None


def check_scaled_recursion(level: str) -> str | None:
    """d (s+d-1) m_d = ((d-1)(b-a)/s) m_{d-1} + (a b / s^2) m_{d-2}, exactly."""
    for a, b in _MOMENT_PAIRS:
        params = moments.BetaParams(a, b)
        s = params.total
        table = moments.central_moments_recursive(params, 20)
        m = table.normalized
        for d in range(2, 21):
            lhs = d * (s + d - 1) * m[d]
            rhs = (d - 1) * (b - a) / s * m[d - 1] + a * b / (s * s) * m[d - 2]
            if lhs != rhs:
                return f"Beta({a},{b}) d={d}: scaled recursion violated ({lhs} != {rhs})"
    return None


def check_p_recursive_form(level: str) -> str | None:
    """The recursion coefficients are degree <= 1 in d: second differences vanish."""
    for a, b in _MOMENT_PAIRS:
        params = moments.BetaParams(a, b)
        for d in range(2, 12):
            trip = [moments.recursion_coefficients(params, dd) for dd in (d, d + 1, d + 2)]
            for i in range(3):
                first = trip[1][i] - trip[0][i]
                second = trip[2][i] - trip[1][i]
                if first != second:
                    return f"Beta({a},{b}): coefficient {i} is not linear in d near d={d}"
    return None


def check_variance_scale_identities(level: str) -> str | None:
    """mu_2 and mu_3/mu_2 match their closed forms exactly."""
    for a, b in _MOMENT_PAIRS:
        params = moments.BetaParams(a, b)
        s = a + b
        table = moments.central_moments_recursive(params, 3)
        if table.central[2] != a * b / (s * s * (s + 1)):
            return f"Beta({a},{b}): mu_2 = {table.central[2]} mismatches closed form"
        if table.central[3] / table.central[2] != 2 * (b - a) / (s * (s + 2)):
            return f"Beta({a},{b}): mu_3/mu_2 mismatches closed form"
    return None


def check_vc_sign_consistency(level: str) -> str | None:
    """sub_gamma_params equals (mu_2, mu_3/mu_2) exactly, sign of c included."""
    for a, b in _MOMENT_PAIRS + [(Fraction(98), Fraction(2)), (Fraction(3), Fraction(1))]:
        params = moments.BetaParams(a, b)
        sg = bounds.sub_gamma_params(params)
        table = moments.central_moments_recursive(params, 3)
        if sg.v != table.central[2]:
            return f"Beta({a},{b}): v={sg.v} but mu_2={table.central[2]}"
        if sg.c != table.central[3] / table.central[2]:
            return (
                f"Beta({a},{b}): c={sg.c} but mu_3/mu_2="
                f"{table.central[3] / table.central[2]} (check the sign of c)"
            )
    return None


def check_ibeta_symmetry(level: str) -> str | None:
    """I_x(a,b) + I_{1-x}(b,a) = 1 within 2 * rel_tol."""
    rng = random.Random(_SEED + 1)
    n = 200 if level == "full" else 40
    for _ in range(n):
        a = rng.uniform(0.3, 60.0)
        b = rng.uniform(0.3, 60.0)
        # dyadic x so x and 1-x are both exact doubles
        x = rng.randint(0, 4096) / 4096.0
        lhs = regularized_incomplete_beta(a, b, x) + regularized_incomplete_beta(
            b, a, 1.0 - x
        )
        if abs(lhs - 1.0) > 2 * DEFAULT_CONFIG.rel_tol:
            return f"I_x(a,b)+I_(1-x)(b,a)-1 = {lhs - 1.0:.3e} at a={a}, b={b}, x={x}"
    return None


def check_ibeta_monotone(level: str) -> str | None:
    n = 200 if level == "full" else 50
    for a, b in [(0.5, 0.5), (2.0, 98.0), (7.0, 11.0 / 3.0), (98.0, 2.0)]:
        prev = 0.0
        for x in _linspace(0.0, 1.0, n):
            cur = regularized_incomplete_beta(a, b, x)
            if cur < prev - 1e-14:
                return f"I_x({a},{b}) decreased at x={x}"
            prev = cur
    return None


def check_log_gamma_ratio(level: str) -> str | None:
    """exp(lg(x+1)) / exp(lg(x)) = x to 1e-12 relative."""
    for x in (0.5, 1.0, 2.5, 10.0, 100.0):
        ratio = math.exp(log_gamma(x + 1.0)) / math.exp(log_gamma(x))
        if abs(ratio - x) > 1e-12 * x:
            return f"Gamma(x+1)/Gamma(x) = {ratio} != {x}"
    return None


def check_2f1_pochhammer_sum(level: str) -> str | None:
    """Terminating 2F1 equals a locally coded term-by-term Pochhammer sum."""

    def poch(x: Fraction, k: int) -> Fraction:
        out = Fraction(1)
        for i in range(k):
            out *= x + i
        return out

    rng = random.Random(_SEED + 2)
    n = 40 if level == "full" else 12
    for _ in range(n):
        a = Fraction(rng.randint(-6, 9), rng.randint(1, 5))
        c = Fraction(rng.randint(1, 9), rng.randint(1, 5))
        z = Fraction(rng.randint(-8, 8), rng.randint(1, 6))
        d = rng.randint(0, 9)
        direct = sum(
            poch(a, k) * poch(Fraction(-d), k) / (poch(c, k) * math.factorial(k)) * z**k
            for k in range(d + 1)
        )
        val = gauss_2f1_terminating(a, d, c, z)
        if val != direct:
            return f"2F1({a},-{d};{c};{z}) = {val} != direct sum {direct}"
    return None


def check_bernstein_soundness(level: str) -> str | None:
    """Bound minus exact tail >= -1e-10 across both tails of every grid pair."""
    n = 200 if level == "full" else 25
    pairs = _SOUNDNESS_PAIRS if level == "full" else _SOUNDNESS_PAIRS[1:4]
    for a, b in pairs:
        params = moments.BetaParams(a, b)
        mu = float(params.mean())
        for side, width in (
            (bounds.TailSide.UPPER, 1.0 - mu),
            (bounds.TailSide.LOWER, mu),
        ):
            for eps in _linspace(0.0, width, n):
                bd = bounds.bernstein_tail_bound(params, eps, side)
                exact = bounds.exact_tail(params, eps, side)
                if bd - exact < -1e-10:
                    return (
                        f"Beta({a},{b}) {side.value} eps={eps}: bound {bd} below "
                        f"exact tail {exact}"
                    )
    return None


def check_bernstein_reflection(level: str) -> str | None:
    for a, b in [(Fraction(2), Fraction(98)), (Fraction(7), Fraction(11, 3))]:
        params = moments.BetaParams(a, b)
        swapped = moments.BetaParams(b, a)
        for eps in _linspace(0.0, 0.3, 16):
            lower = bounds.bernstein_tail_bound(params, eps, bounds.TailSide.LOWER)
            upper = bounds.bernstein_tail_bound(swapped, eps, bounds.TailSide.UPPER)
            if lower != upper:
                return f"Beta({a},{b}) eps={eps}: lower {lower} != swapped upper {upper}"
    return None


def check_bound_monotonicity(level: str) -> str | None:
    n = 120 if level == "full" else 40
    for a, b in [(Fraction(2), Fraction(98)), (Fraction(5), Fraction(5)), (Fraction(98), Fraction(2))]:
        params = moments.BetaParams(a, b)
        for side in bounds.TailSide:
            prev = math.inf
            for eps in _linspace(0.0, 0.6, n):
                cur = bounds.bernstein_tail_bound(params, eps, side)
                if cur > prev + 1e-15:
                    return f"Beta({a},{b}) {side.value}: bound increased at eps={eps}"
                prev = cur
    return None


def check_log_refinement(level: str) -> str | None:
    """x - x^2/(2(1+x/3)) lies strictly below log(1+x) for x > 0, equal at 0.

    This is the direction the quadratic refinement actually satisfies (its gap
    to log(1+x) has non-negative derivative and vanishes at the origin), and
    the one a sign error in the formula would break.
    """
    if bounds.log_upper_bound(0.0) != 0.0:
        return "refinement must vanish at x = 0"
    if abs(bounds.log_upper_bound(3.0) - 0.75) > 1e-15:
        return f"refinement at x=3 is {bounds.log_upper_bound(3.0)}, expected 0.75"
    rng = random.Random(_SEED + 3)
    n = 1_000_000 if level == "full" else 20_000
    for _ in range(n):
        x = rng.uniform(0.0, 100.0)
        if x > 0.0 and math.log1p(x) <= bounds.log_upper_bound(x):
            return f"log(1+x) <= refinement at x={x}"
    return None


def check_subgaussian_proxy(level: str) -> str | None:
    """Symmetric shapes are strictly sub-gaussian; skewed ones exceed v clearly."""
    sym = moments.BetaParams(Fraction(5), Fraction(5))
    v = float(bounds.sub_gamma_params(sym).v)
    proxy = bounds.subgaussian_optimal_proxy(sym)
    if abs(proxy - v) > 1e-6 * v:
        return f"Beta(5,5): proxy {proxy} differs from v {v}"
    skew = moments.BetaParams(Fraction(2), Fraction(98))
    v = float(bounds.sub_gamma_params(skew).v)
    proxy = bounds.subgaussian_optimal_proxy(skew)
    if proxy <= 1.01 * v:
        return f"Beta(2,98): proxy {proxy} not strictly above v {v}"
    return None


def check_comparison_ordering(level: str) -> str | None:
    """exact <= bernstein <= subgaussian with a strict middle at interior points."""
    cases = [
        ((Fraction(2), Fraction(98)), 0.05),
        ((Fraction(2), Fraction(998)), 0.005),
    ]
    if level != "full":
        cases = cases[:1]
    steps = 100 if level == "full" else 16
    for (a, b), stop in cases:
        params = moments.BetaParams(a, b)
        rows = comparison_rows(params, GridSpec(0.0, stop, steps))
        for i, row in enumerate(rows):
            if row.exact > row.chernoff + 1e-10 or row.chernoff > row.bernstein + 1e-10:
                return (
                    f"Beta({a},{b}) eps={row.epsilon}: exact={row.exact}, "
                    f"chernoff={row.chernoff}, bernstein={row.bernstein}"
                )
            if row.exact > row.subgaussian + 1e-10:
                return f"Beta({a},{b}) eps={row.epsilon}: exact above subgaussian"
            if 0 < i < len(rows) - 1:
                if not row.exact < row.bernstein < row.subgaussian:
                    return (
                        f"Beta({a},{b}) eps={row.epsilon}: ordering exact < bernstein "
                        f"< subgaussian violated ({row.exact}, {row.bernstein}, "
                        f"{row.subgaussian})"
                    )
    return None


def check_mgf_series_consistency(level: str) -> str | None:
    """Closed-form phi agrees with the truncated moment series within the certified tail."""
    n = 17 if level == "full" else 9
    for a, b in [(Fraction(2), Fraction(98)), (Fraction(2), Fraction(3)), (Fraction(98), Fraction(2))]:
        params = moments.BetaParams(a, b)
        table = moments.central_moments_recursive(params, 40)
        for t in _linspace(-20.0, 20.0, n):
            if t == 0.0:
                continue
            series = 1.0 + math.fsum(
                float(table.normalized[d]) * t**d for d in range(2, 41)
            )
            tail = math.fsum(abs(t) ** d / math.factorial(d) for d in range(41, 160))
            phi = chernoff.centered_mgf(params, t)
            if abs(phi - series) > tail + 1e-9 * abs(phi):
                return f"Beta({a},{b}) t={t}: |phi - series| = {abs(phi - series)} > {tail}"
    return None


def check_cgf_convexity(level: str) -> str | None:
    """Divided differences of psi are non-decreasing on a sampled grid."""
    n = 40 if level == "full" else 15
    for a, b in [(Fraction(2), Fraction(98)), (Fraction(5), Fraction(5))]:
        params = moments.BetaParams(a, b)
        ts = _linspace(-15.0, 15.0, n)
        vals = [chernoff.cgf(params, t) for t in ts]
        prev_slope = -math.inf
        for i in range(1, len(ts)):
            slope = (vals[i] - vals[i - 1]) / (ts[i] - ts[i - 1])
            if slope < prev_slope - 1e-9:
                return f"Beta({a},{b}): psi slope decreased near t={ts[i]}"
            prev_slope = slope
    return None


def _inequality_t_grid(a: int, b: int, n: int) -> list[float]:
    sg = bounds.sub_gamma_params(moments.BetaParams(Fraction(a), Fraction(b)))
    c = float(sg.c)
    hi = 0.95 / c if c > 0 else 20.0
    return _logspace(1e-3, hi, n)


def check_derivative_ratio(level: str) -> str | None:
    n = 50 if level == "full" else 10
    pairs = _INEQUALITY_PAIRS if level == "full" else [(2, 98), (5, 5), (98, 2)]
    for a, b in pairs:
        params = moments.BetaParams(Fraction(a), Fraction(b))
        for t in _inequality_t_grid(a, b, n):
            if not chernoff.derivative_ratio_check(params, t):
                return f"Beta({a},{b}) t={t}: phi'/phi exceeds its bound"
    return None


def check_cumulant_upper_bound(level: str) -> str | None:
    n = 50 if level == "full" else 10
    pairs = _INEQUALITY_PAIRS if level == "full" else [(2, 98), (5, 5), (98, 2)]
    for a, b in pairs:
        params = moments.BetaParams(Fraction(a), Fraction(b))
        sg = bounds.sub_gamma_params(params)
        for t in _inequality_t_grid(a, b, n):
            psi = chernoff.cgf(params, t)
            cap = chernoff.cumulant_upper_bound(sg, t)
            if psi > cap + 1e-10:
                return f"Beta({a},{b}) t={t}: psi={psi} above cumulant bound {cap}"
    return None


def check_exponent_dominates_bound(level: str) -> str | None:
    """psi*(eps) dominates the closed-form exponent for beta >= alpha."""
    n = 12 if level == "full" else 5
    pairs = [(2, 98), (2, 998), (5, 5), (1, 1), (2, 3)] if level == "full" else [(2, 98), (5, 5)]
    for a, b in pairs:
        params = moments.BetaParams(Fraction(a), Fraction(b))
        sg = bounds.sub_gamma_params(params)
        v, c = float(sg.v), float(sg.c)
        mu = float(params.mean())
        for eps in _logspace(1e-3 * (1 - mu), 0.5 * (1 - mu), n):
            res = chernoff.chernoff_exponent_numeric(params, eps, bounds.TailSide.UPPER)
            target = eps * eps / (2.0 * (v + c * eps / 3.0))
            if res.exponent < target - 1e-10:
                return (
                    f"Beta({a},{b}) eps={eps}: psi*={res.exponent} below "
                    f"closed-form exponent {target}"
                )
    return None


def check_tilt_identity(level: str) -> str | None:
    """eps*best_tilt - cumulant_upper_bound(best_tilt) equals (v/c^2)(x - log(1+x)) at x = c eps / v."""
    for a, b in [(2, 98), (2, 998), (2, 3)]:
        params = moments.BetaParams(Fraction(a), Fraction(b))
        sg = bounds.sub_gamma_params(params)
        v, c = float(sg.v), float(sg.c)
        mu = float(params.mean())
        for eps in _logspace(1e-4 * (1 - mu), 0.5 * (1 - mu), 9):
            tb = chernoff.best_tilt(sg, eps)
            lhs = eps * tb - chernoff.cumulant_upper_bound(sg, tb)
            x = c * eps / v
            rhs = v / (c * c) * (x - math.log1p(x))
            if abs(lhs - rhs) > 1e-12 * max(1.0, abs(rhs)):
                return f"Beta({a},{b}) eps={eps}: {lhs} != {rhs}"
    return None


def check_exponent_expansion(level: str) -> str | None:
    """|psi* - (eps^2/2v - c eps^3/6v^2)| / eps^4 stays within a factor of 4."""
    pairs = [(2, 5), (2, 98), (3, 3)] if level == "full" else [(2, 5)]
    for a, b in pairs:
        params = moments.BetaParams(Fraction(a), Fraction(b))
        ratios = []
        for eps in (0.02, 0.01, 0.005, 0.0025):
            res = chernoff.chernoff_exponent_numeric(params, eps, bounds.TailSide.UPPER)
            resid = abs(res.exponent - chernoff.chernoff_exponent_expansion(params, eps))
            ratios.append(resid / eps**4)
        if max(ratios) / min(ratios) >= 4.0:
            return f"Beta({a},{b}): residual/eps^4 ratios {ratios} spread beyond 4x"
    return None


CHECKS: list[tuple[str, object]] = [
    ("ORACLE-EQUIVALENCE", check_oracle_equivalence),
    ("SIGN-ODD-MOMENTS", check_sign_odd_moments),
    ("EVEN-NONNEGATIVE", check_even_moments_nonnegative),
    ("MOMENT-BOUNDEDNESS", check_moment_boundedness),
    ("SCALED-RECURSION", check_scaled_recursion),
    ("P-RECURSIVE-FORM", check_p_recursive_form),
    ("VARIANCE-SCALE-IDENTITIES", check_variance_scale_identities),
    ("VC-SIGN-CONSISTENCY", check_vc_sign_consistency),
    ("IBETA-SYMMETRY", check_ibeta_symmetry),
    ("IBETA-MONOTONE", check_ibeta_monotone),
    ("LOG-GAMMA-RATIO", check_log_gamma_ratio),
    ("2F1-POCHHAMMER-SUM", check_2f1_pochhammer_sum),
    ("BERNSTEIN-SOUNDNESS", check_bernstein_soundness),
    ("BERNSTEIN-REFLECTION", check_bernstein_reflection),
    ("BOUND-MONOTONICITY", check_bound_monotonicity),
    ("LOG-REFINEMENT", check_log_refinement),
    ("SUBGAUSSIAN-PROXY", check_subgaussian_proxy),
    ("COMPARISON-ORDERING", check_comparison_ordering),
    ("MGF-SERIES-CONSISTENCY", check_mgf_series_consistency),
    ("CGF-CONVEXITY", check_cgf_convexity),
    ("MGF-DERIVATIVE-RATIO", check_derivative_ratio),
    ("CUMULANT-UPPER-BOUND", check_cumulant_upper_bound),
    ("EXPONENT-DOMINATES-BOUND", check_exponent_dominates_bound),
    ("TILT-IDENTITY", check_tilt_identity),
    ("EXPONENT-EXPANSION", check_exponent_expansion),
]


def run_verification(level: str) -> tuple[bool, list[str]]:
    """Run every check at the given level; returns (all_passed, report lines)."""
    if level not in ("quick", "full"):
        raise ValueError(f"level must be 'quick' or 'full', got {level!r}")
    lines = []
    ok = True
    for name, fn in CHECKS:
        failure = fn(level)
        if failure is None:
            lines.append(f"PASS {name}")
        else:
            ok = False
            lines.append(f"FAIL {name}: {failure}")
            break
    return ok, lines

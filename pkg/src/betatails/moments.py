"""Central moments of the Beta distribution.

The workhorse is an order-2 recurrence with coefficients linear in the moment
order, evaluated in exact rational arithmetic:

    (alpha+beta)^2 (alpha+beta+d-1) mu_d
        = (d-1)(beta-alpha)(alpha+beta) mu_{d-1} + (d-1) alpha beta mu_{d-2}

Two independent routes to the same numbers (binomial expansion over raw
moments, and a terminating 2F1 representation) are provided purely for
cross-validation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .specfun import gauss_2f1_terminating, pochhammer

Scalar = Fraction | float

# Numerators of exact moments grow without bound in the order; cap the table
# size so a typo cannot exhaust memory.
MAX_MOMENT_ORDER = 10_000


@dataclass(frozen=True)
class BetaParams:
    """Shape pair (alpha, beta) of a Beta distribution.

    Carry Fractions (or ints) for the exact path; floats select the
    double-precision path and forfeit the exact-equality guarantees.
    """

    alpha: Scalar
    beta: Scalar

    def __post_init__(self):
        if isinstance(self.alpha, int):
            object.__setattr__(self, "alpha", Fraction(self.alpha))
        if isinstance(self.beta, int):
            object.__setattr__(self, "beta", Fraction(self.beta))
        if self.alpha <= 0 or self.beta <= 0:
            raise ValueError(
                f"shape parameters must be positive, got alpha={self.alpha}, beta={self.beta}"
            )

    @property
    def is_exact(self) -> bool:
        return isinstance(self.alpha, Fraction) and isinstance(self.beta, Fraction)

    @property
    def total(self) -> Scalar:
        return self.alpha + self.beta

    def mean(self) -> Scalar:
        return self.alpha / self.total

    def swapped(self) -> "BetaParams":
        """Parameters of 1 - X, which is Beta(beta, alpha)."""
        return BetaParams(self.beta, self.alpha)


@dataclass(frozen=True)
class MomentTable:
    """Central moments mu_d and normalized moments m_d = mu_d / d! for d = 0..dmax.

    Built once by central_moments_recursive and immutable afterwards, so a
    table can be shared freely across threads.
    """

    params: BetaParams
    central: tuple[Scalar, ...]
    normalized: tuple[Scalar, ...]

    def __len__(self) -> int:
        return len(self.central)

    def central_moment(self, d: int) -> Scalar:
        return self.central[d]

    def normalized_moment(self, d: int) -> Scalar:
        return self.normalized[d]


def raw_moment(params: BetaParams, d: int) -> Scalar:
    """E[X^d] = (alpha)_d / (alpha+beta)_d."""
    if d < 0:
        raise ValueError(f"moment order must be non-negative, got {d}")
    return pochhammer(params.alpha, d) / pochhammer(params.total, d)


def recursion_coefficients(params: BetaParams, d: int) -> tuple[Scalar, Scalar, Scalar]:
    """Coefficients (p, q, r) with p(d) mu_d = q(d) mu_{d-1} + r(d) mu_{d-2}.

    Each is degree <= 1 in d, which is what makes the moment sequence
    P-recursive of order 2.
    """
    s = params.total
    p = s * s * (s + d - 1)
    q = (d - 1) * (params.beta - params.alpha) * s
    r = (d - 1) * params.alpha * params.beta
    return p, q, r


def central_moments_recursive(params: BetaParams, dmax: int) -> MomentTable:
    """Central moments mu_0..mu_dmax via the order-2 recurrence, one pass, O(dmax).

    Exact rationals when params are exact; plain double arithmetic otherwise
    (the recurrence is numerically benign: positive denominators, coefficient
    magnitudes below 1).
    """
    if dmax < 0:
        raise ValueError(f"dmax must be non-negative, got {dmax}")
    if dmax > MAX_MOMENT_ORDER:
        raise ValueError(
            f"dmax={dmax} exceeds the supported maximum of {MAX_MOMENT_ORDER}"
        )
    exact = params.is_exact
    one: Scalar = Fraction(1) if exact else 1.0
    zero: Scalar = Fraction(0) if exact else 0.0
    central = [one, zero]
    for d in range(2, dmax + 1):
        p, q, r = recursion_coefficients(params, d)
        central.append((q * central[d - 1] + r * central[d - 2]) / p)
    central = central[: dmax + 1]

    if exact:
        normalized = [mu / math.factorial(d) for d, mu in enumerate(central)]
    else:
        # float path: d! overflows past d=170, so run the scaled recurrence
        # d (s+d-1) m_d = ((d-1)(b-a)/s) m_{d-1} + (a b / s^2) m_{d-2} instead
        a, b = float(params.alpha), float(params.beta)
        s = a + b
        normalized = [1.0, 0.0]
        for d in range(2, dmax + 1):
            m = (
                (d - 1) * (b - a) / s * normalized[d - 1]
                + a * b / (s * s) * normalized[d - 2]
            ) / (d * (s + d - 1))
            normalized.append(m)
        normalized = normalized[: dmax + 1]

    return MomentTable(params=params, central=tuple(central), normalized=tuple(normalized))


def central_moment_binomial_oracle(params: BetaParams, d: int) -> Scalar:
    """E[(X - E[X])^d] by brute-force binomial expansion over raw moments.

    Independent of the recurrence; used to cross-check it.
    """
    if d < 0:
        raise ValueError(f"moment order must be non-negative, got {d}")
    mu = params.mean()
    total = Fraction(0) if params.is_exact else 0.0
    for k in range(d + 1):
        sign = -1 if (d - k) % 2 else 1
        total += sign * math.comb(d, k) * raw_moment(params, k) * mu ** (d - k)
    return total


def central_moment_hypergeom_oracle(params: BetaParams, d: int) -> Fraction:
    """E[(X - E[X])^d] = (-alpha/(alpha+beta))^d 2F1(alpha, -d; alpha+beta; (alpha+beta)/alpha).

    Exact rational path only; a second independent cross-check of the
    recurrence.
    """
    if not params.is_exact:
        raise ValueError("hypergeometric oracle requires exact rational parameters")
    if d < 0:
        raise ValueError(f"moment order must be non-negative, got {d}")
    mu = Fraction(params.alpha) / Fraction(params.total)
    hyp = gauss_2f1_terminating(params.alpha, d, params.total, 1 / mu)
    return (-mu) ** d * hyp


def standardized_moment(params: BetaParams, d: int) -> float:
    """mu_d / mu_2^(d/2) as a double (skewness at d=3, kurtosis at d=4, ...)."""
    if d < 2:
        raise ValueError(f"standardized moments need d >= 2, got {d}")
    table = central_moments_recursive(params, d)
    return float(table.central[d]) / float(table.central[2]) ** (d / 2)

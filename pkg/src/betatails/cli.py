"""Command-line front end.

Subcommands:

    moments  -- exact central moments as a text table
    bound    -- one Bernstein-type tail bound value with its parameters
    compare  -- CSV comparing exact tail, Bernstein, sub-gaussian, and
                numeric Chernoff bounds over a deviation grid
    verify   -- run the built-in invariant suite

Shape parameters accept decimal literals (numeric path) or p/q rational
literals (exact path). Exit codes: 0 success, 1 verification failure,
2 argument error, 3 I/O failure, 4 internal soundness violation.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import bounds, chernoff, moments
from .specfun import DEFAULT_CONFIG, EvalConfig

# slack for the generated-row sanity checks; a violation beyond this is a bug
_ROW_SLACK = 1e-10


class SoundnessError(RuntimeError):
    """A generated comparison row violated a bound-ordering invariant."""


@dataclass(frozen=True)
class GridSpec:
    """Deviation grid [start, stop] sampled at `steps` points."""

    start: float
    stop: float
    steps: int

    def __post_init__(self):
        if self.start < 0:
            raise ValueError(f"grid start must be non-negative, got {self.start}")
        if self.stop <= self.start:
            raise ValueError(f"grid stop must exceed start, got {self.start}:{self.stop}")
        if self.steps < 2:
            raise ValueError(f"grid needs at least 2 steps, got {self.steps}")

    def points(self, log_spacing: bool = False) -> list[float]:
        if log_spacing:
            if self.start <= 0:
                raise ValueError("log-spaced grids need a positive start")
            r = math.log(self.stop / self.start)
            return [self.start * math.exp(r * i / (self.steps - 1)) for i in range(self.steps)]
        span = self.stop - self.start
        return [self.start + span * i / (self.steps - 1) for i in range(self.steps)]


@dataclass(frozen=True)
class ComparisonRow:
    epsilon: float
    exact: float
    bernstein: float
    subgaussian: float
    chernoff: float


CSV_HEADER = "epsilon,exact,bernstein,subgaussian,chernoff"


def comparison_rows(
    params: moments.BetaParams,
    grid: GridSpec,
    cfg: EvalConfig = DEFAULT_CONFIG,
    log_spacing: bool = False,
) -> list[ComparisonRow]:
    """Upper-tail comparison rows over the grid, soundness-checked.

    The sub-gaussian proxy is optimized once per call and reused for every
    row. The Chernoff column is exp(-psi*(eps)); a non-converged optimizer
    still yields a valid bound since every evaluated t gives one.
    """
    mu = float(params.mean())
    width = 1.0 - mu
    proxy = bounds.subgaussian_optimal_proxy(params, cfg)
    rows = []
    for eps in grid.points(log_spacing):
        exact = bounds.exact_tail(params, eps, bounds.TailSide.UPPER, cfg)
        bern = bounds.bernstein_tail_bound(params, eps, bounds.TailSide.UPPER)
        subg = bounds.subgaussian_bound(params, eps, cfg, proxy=proxy)
        if eps == 0.0:
            cher = 1.0
        elif eps >= width:
            cher = 0.0
        else:
            result = chernoff.chernoff_exponent_numeric(
                params, eps, bounds.TailSide.UPPER, cfg
            )
            cher = math.exp(-result.exponent)
        row = ComparisonRow(
            epsilon=eps, exact=exact, bernstein=bern, subgaussian=subg, chernoff=cher
        )
        _check_row(params, row)
        rows.append(row)
    return rows


def _check_row(params: moments.BetaParams, row: ComparisonRow) -> None:
    values = (row.exact, row.bernstein, row.subgaussian, row.chernoff)
    if any(not 0.0 <= p <= 1.0 for p in values):
        raise SoundnessError(f"probability outside [0,1] at eps={row.epsilon}: {row}")
    if row.exact > row.chernoff + _ROW_SLACK:
        raise SoundnessError(
            f"{params}: exact tail {row.exact} above Chernoff bound {row.chernoff} "
            f"at eps={row.epsilon}"
        )
    if row.chernoff > row.bernstein + _ROW_SLACK:
        raise SoundnessError(
            f"{params}: Chernoff bound {row.chernoff} above Bernstein bound "
            f"{row.bernstein} at eps={row.epsilon}"
        )
    if row.exact > row.subgaussian + _ROW_SLACK:
        raise SoundnessError(
            f"{params}: exact tail {row.exact} above sub-gaussian bound "
            f"{row.subgaussian} at eps={row.epsilon}"
        )


def render_csv(rows: list[ComparisonRow]) -> str:
    """Deterministic CSV text: shortest round-trip decimals, LF endings."""
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(
            f"{r.epsilon!r},{r.exact!r},{r.bernstein!r},{r.subgaussian!r},{r.chernoff!r}"
        )
    return "\n".join(lines) + "\n"


def parse_scalar(text: str):
    """Parameter literal: 'p/q' is exact, anything else parses as a float."""
    text = text.strip()
    if "/" in text:
        try:
            return Fraction(text)
        except ZeroDivisionError:
            raise ValueError(f"invalid rational literal {text!r}: zero denominator")
    try:
        as_int = int(text)
    except ValueError:
        return float(text)
    return Fraction(as_int)


def _parse_params(args) -> moments.BetaParams:
    return moments.BetaParams(parse_scalar(args.alpha), parse_scalar(args.beta))


def _parse_grid(text: str) -> GridSpec:
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"grid must be start:stop:steps, got {text!r}")
    return GridSpec(start=float(parts[0]), stop=float(parts[1]), steps=int(parts[2]))


def _config(args) -> EvalConfig:
    tol = getattr(args, "tol", None)
    if tol is None:
        return DEFAULT_CONFIG
    return EvalConfig(rel_tol=tol, max_iter=DEFAULT_CONFIG.max_iter)


def cmd_moments(args) -> int:
    params = _parse_params(args)
    if args.dmax < 0:
        raise ValueError(f"--dmax must be non-negative, got {args.dmax}")
    table = moments.central_moments_recursive(params, args.dmax)
    print(f"central moments of Beta({params.alpha}, {params.beta})")
    print(f"{'d':>4}  {'mu_d':<24}  decimal")
    for d, mu in enumerate(table.central):
        print(f"{d:>4}  {str(mu):<24}  {float(mu)!r}")
    return 0


def cmd_bound(args) -> int:
    params = _parse_params(args)
    if args.eps < 0:
        raise ValueError(f"--eps must be non-negative, got {args.eps}")
    side = bounds.TailSide(args.side)
    # report the parameters of the side actually evaluated (lower = swapped upper)
    effective = params if side is bounds.TailSide.UPPER else params.swapped()
    sg = bounds.sub_gamma_params(effective)
    branch = "sub-gamma" if effective.beta >= effective.alpha else "gaussian"
    value = bounds.bernstein_tail_bound(params, args.eps, side)
    print(f"alpha = {params.alpha}")
    print(f"beta = {params.beta}")
    print(f"side = {side.value}")
    print(f"eps = {args.eps!r}")
    print(f"v = {float(sg.v)!r}")
    print(f"c = {float(sg.c)!r}")
    print(f"branch = {branch}")
    print(f"bound = {value!r}")
    return 0


def cmd_compare(args) -> int:
    params = _parse_params(args)
    grid = _parse_grid(args.grid)
    cfg = _config(args)
    try:
        rows = comparison_rows(params, grid, cfg, log_spacing=args.log_grid)
    except SoundnessError as exc:
        print(f"soundness violation: {exc}", file=sys.stderr)
        return 4
    text = render_csv(rows)
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return 3
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def cmd_verify(args) -> int:
    from . import _verify

    ok, lines = _verify.run_verification(args.level)
    for line in lines:
        print(line)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="betatails",
        description="Exact Beta central moments and sharp Bernstein-type tail bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_moments = sub.add_parser("moments", help="print exact central moments")
    p_moments.add_argument("--alpha", required=True, help="shape alpha (decimal or p/q)")
    p_moments.add_argument("--beta", required=True, help="shape beta (decimal or p/q)")
    p_moments.add_argument("--dmax", type=int, required=True, help="largest moment order")
    p_moments.set_defaults(func=cmd_moments)

    p_bound = sub.add_parser("bound", help="evaluate the Bernstein-type tail bound")
    p_bound.add_argument("--alpha", required=True)
    p_bound.add_argument("--beta", required=True)
    p_bound.add_argument("--eps", type=float, required=True, help="deviation from the mean")
    p_bound.add_argument("--side", choices=["upper", "lower"], required=True)
    p_bound.add_argument("--tol", type=float, default=None, help="override relative tolerance")
    p_bound.set_defaults(func=cmd_bound)

    p_compare = sub.add_parser("compare", help="write a bound-comparison CSV")
    p_compare.add_argument("--alpha", required=True)
    p_compare.add_argument("--beta", required=True)
    p_compare.add_argument("--grid", required=True, help="deviation grid start:stop:steps")
    p_compare.add_argument("--out", required=True, help="output CSV path")
    p_compare.add_argument("--log-grid", action="store_true", help="log-spaced grid")
    p_compare.add_argument("--tol", type=float, default=None, help="override relative tolerance")
    p_compare.set_defaults(func=cmd_compare)

    p_verify = sub.add_parser("verify", help="run the invariant suite")
    p_verify.add_argument("level", nargs="?", choices=["quick", "full"], default="quick")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"argument error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

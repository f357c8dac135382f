#!/usr/bin/env python3
"""Regenerate the tail-bound comparison CSVs for the two skewed benchmark shapes.

Writes beta_2_98.csv (deviations 0..0.05) and beta_2_998.csv (0..0.005),
each with columns epsilon,exact,bernstein,subgaussian,chernoff. Output is
byte-for-byte reproducible. Plot with any CSV-aware tool, e.g.:

    python scripts/make_comparison_data.py results/
"""

import sys
from pathlib import Path

from betatails.cli import main

JOBS = [
    ("2", "98", "0:0.05:100", "beta_2_98.csv"),
    ("2", "998", "0:0.005:100", "beta_2_998.csv"),
]


def run(out_dir: Path) -> int:
    out_dir.mkdir(parents=True, exist_ok=True)
    for alpha, beta, grid, name in JOBS:
        rc = main([
            "compare", "--alpha", alpha, "--beta", beta,
            "--grid", grid, "--out", str(out_dir / name),
        ])
        if rc != 0:
            return rc
    return 0


if __name__ == "__main__":
    target = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("results")
    sys.exit(run(target))

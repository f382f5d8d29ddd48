#!/usr/bin/env python3
"""Grid audit of the beta-function lower bound; writes the margin CSV.

Usage: python scripts/run_sweep.py [--grid N] [--out sweep.csv]
"""

import argparse
import csv
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from betabound.proof import CSV_HEADER, sweep_theorem  # noqa: E402


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--grid", type=int, default=1000)
    parser.add_argument("--out", default="sweep.csv")
    args = parser.parse_args()

    start = time.perf_counter()
    with open(args.out, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER.split(","))
        result = sweep_theorem(
            args.grid, row_sink=lambda row: writer.writerow([repr(v) for v in row])
        )
    elapsed = time.perf_counter() - start

    print(f"swept {result.rows_written} cells in {elapsed:.2f}s -> {args.out}")
    print(f"min new-bound margin  {result.min_margin_new:.8e} at {result.argmin_new}")
    print(f"min ivady margin      {result.min_margin_ivady:.3e} at {result.argmin_ivady}")
    print(f"min alzer margin      {result.min_margin_alzer:.3e} at {result.argmin_alzer}")
    print(f"alpha used            {result.alpha_used!r}")
    print(f"corner equalities     {result.corner_equalities}")
    print(f"worst cell at 50 digits: {result.hp_min_margin} (agrees={result.hp_agrees})")
    return 0 if (result.min_margin_new > 0 and result.hp_agrees) else 1


if __name__ == "__main__":
    raise SystemExit(main())

#!/usr/bin/env python3
"""Replay the full proof at two precisions and write the JSON reports.

Usage: python scripts/run_replay.py [--out-dir DIR]
"""

import argparse
import json
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from betabound.proof import replay_all  # noqa: E402


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default=".", help="where to write reports")
    args = parser.parse_args()
    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    exit_code = 0
    for dps in (50, 30):
        start = time.perf_counter()
        report = replay_all(dps=dps)
        elapsed = time.perf_counter() - start
        path = out_dir / f"replay_report_dps{dps}.json"
        path.write_text(json.dumps(report.to_json_obj(), indent=2) + "\n")
        print(f"--- precision {dps} digits ({elapsed:.2f}s) -> {path}")
        for step in report.steps:
            print(f"  [{step.status:>12}] {step.id}")
        counts = report.counts
        print(
            f"  total {len(report.steps)}, verified {counts['verified']}, "
            f"failed {counts['failed']}, inconclusive {counts['inconclusive']}"
        )
        if not report.all_verified:
            exit_code = 1
    return exit_code


if __name__ == "__main__":
    raise SystemExit(main())

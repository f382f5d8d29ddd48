#!/usr/bin/env python3
"""Reproduce every reference decimal in one table: constants, roots,
and the three transcendental proof values.

Usage: python scripts/reproduce_reference_values.py
"""

import pathlib
import sys
from fractions import Fraction as F

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from betabound import signs  # noqa: E402
from betabound.catalogue import load_catalogue  # noqa: E402
from betabound.constants import (  # noqa: E402
    REFERENCE_DIGITS,
    agrees_with_printed,
    compute_constants,
)
from betabound.proof import big_G, edge_slope  # noqa: E402
from betabound.specials import context, to_mpf  # noqa: E402

HP = context(30)


def row(name: str, value, reference: str) -> bool:
    ok = agrees_with_printed(value, reference)
    mark = "ok " if ok else "BAD"
    print(f"  {mark} {name:<14} computed {HP.nstr(to_mpf(HP, value), 20):<26} reference {reference}")
    return ok


def main() -> int:
    all_ok = True
    print("named constants")
    consts = compute_constants()
    for name, value in (
        ("alpha", consts.alpha),
        ("a1", consts.a1),
        ("a2", consts.a2),
        ("a3", consts.a3),
        ("alzer_max", consts.alzer_max),
    ):
        all_ok &= row(name, value, REFERENCE_DIGITS[name])

    print("crossing roots (enclosure width 1e-6)")
    cat = load_catalogue()
    for k, reference in enumerate(
        ("0.03733", "0.2114", "0.3085", "0.3822", "0.4439"), start=1
    ):
        enc = signs.isolate_crossing(cat.q[k], 0, F(1, 2), F(1, 10**6))
        mid = (enc.lo + enc.hi) / 2
        all_ok &= row(f"x{k}", mid, reference)

    print("transcendental proof values")
    all_ok &= row("g(1/5)", edge_slope(F(1, 5)), "0.001914")
    all_ok &= row("G(0,9/25)", big_G(0, F(9, 25)), "0.0554")
    all_ok &= row("G(1/5,9/25)", big_G(F(1, 5), F(9, 25)), "0.04015")

    print("all reference digits reproduced" if all_ok else "MISMATCHES FOUND")
    return 0 if all_ok else 1


if __name__ == "__main__":
    raise SystemExit(main())

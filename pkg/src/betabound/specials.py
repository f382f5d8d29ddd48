"""High-precision gamma/polygamma/beta evaluation on arbitrary-precision floats.

Everything is computed from scratch on top of ``mpmath`` raw floats
(``mpf``): the gamma family uses the Stirling asymptotic series after
recurrence-shifting the argument above a fixed threshold, with exact
Bernoulli-number coefficients.  mpmath's own gamma/digamma routines are
never called, so they remain available as an independent cross-check in
the test suite (alongside the quadrature oracles).

Precision contract
------------------
``STIRLING_SHIFT`` and ``STIRLING_TERMS`` are fixed: with the argument
shifted to ``x >= 40`` and 21 series terms (Bernoulli numbers up to B_42),
the first omitted series term is below 1e-46 of the result for every
function here (worst case is the second psi derivative), far inside the
library's 1e-30 error budget.  Working precision carries ``GUARD_DIGITS``
extra digits so recurrence accumulation stays below final rounding.
Results are rounded to the requested ``dps`` digits.  Precision is a
per-call parameter; no ambient global state is mutated.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from mpmath.ctx_mp import MPContext

GUARD_DIGITS = 15
STIRLING_SHIFT = 40
STIRLING_TERMS = 21
DEFAULT_DPS = 50


@lru_cache(maxsize=None)
def context(dps: int) -> MPContext:
    """A dedicated mpmath context at `dps` digits (never mutated afterwards)."""
    ctx = MPContext()
    ctx.dps = dps
    return ctx


def to_mpf(ctx: MPContext, value):
    """Convert ints, Fractions, floats, strings and mpfs into ctx's mpf."""
    if isinstance(value, Fraction):
        return ctx.mpf(value.numerator) / ctx.mpf(value.denominator)
    return ctx.mpf(value)


@lru_cache(maxsize=None)
def bernoulli_even(count: int) -> tuple[Fraction, ...]:
    """Exact Bernoulli numbers B_2, B_4, ..., B_{2*count} (B_1 = -1/2)."""
    top = 2 * count
    b = [Fraction(0)] * (top + 1)
    b[0] = Fraction(1)
    for m in range(1, top + 1):
        acc = Fraction(0)
        for j in range(m):
            acc += math.comb(m + 1, j) * b[j]
        b[m] = -acc / (m + 1)
    return tuple(b[2 * k] for k in range(1, count + 1))


@lru_cache(maxsize=None)
def _series_coeffs(dps: int):
    """Per-context mpf copies of the asymptotic-series coefficients."""
    ctx = context(dps)
    bern = bernoulli_even(STIRLING_TERMS)
    lgamma = tuple(
        to_mpf(ctx, b / ((2 * k) * (2 * k - 1)))
        for k, b in enumerate(bern, start=1)
    )
    psi = tuple(to_mpf(ctx, b / (2 * k)) for k, b in enumerate(bern, start=1))
    psi1 = tuple(to_mpf(ctx, b) for b in bern)
    psi2 = tuple(
        to_mpf(ctx, (2 * k + 1) * b) for k, b in enumerate(bern, start=1)
    )
    return lgamma, psi, psi1, psi2


def _positive_arg(ctx: MPContext, x, name: str):
    xm = to_mpf(ctx, x)
    if not xm > 0:
        raise ValueError(f"domain error: {name} requires a positive argument")
    return xm


def _log_gamma_raw(ctx: MPContext, x):
    """log Gamma via argument shifting plus the Stirling series (ctx mpf in/out)."""
    shift_log = None
    prod = None
    while x < STIRLING_SHIFT:
        prod = x if prod is None else prod * x
        x += 1
    coeffs = _series_coeffs(ctx.dps)[0]
    lnx = ctx.ln(x)
    half = ctx.mpf(1) / 2
    result = (x - half) * lnx - x + ctx.ln(2 * ctx.pi) / 2
    inv = 1 / x
    inv2 = inv * inv
    power = inv
    for c in coeffs:
        result += c * power
        power *= inv2
    if prod is not None:
        shift_log = ctx.ln(prod)
        result -= shift_log
    return result


def _psi_raw(ctx: MPContext, x, order: int):
    """psi (order 0), psi' (order 1) or psi'' (order 2), via shift + series."""
    correction = ctx.mpf(0)
    while x < STIRLING_SHIFT:
        if order == 0:
            correction -= 1 / x
        elif order == 1:
            correction += 1 / (x * x)
        else:
            correction -= 2 / (x * x * x)
        x += 1
    _, c_psi, c_psi1, c_psi2 = _series_coeffs(ctx.dps)
    inv = 1 / x
    inv2 = inv * inv
    if order == 0:
        result = ctx.ln(x) - inv / 2
        power = inv2
        for c in c_psi:
            result -= c * power
            power *= inv2
    elif order == 1:
        result = inv + inv2 / 2
        power = inv2 * inv
        for c in c_psi1:
            result += c * power
            power *= inv2
    else:
        result = -inv2 - inv2 * inv
        power = inv2 * inv2
        for c in c_psi2:
            result -= c * power
            power *= inv2
    return result + correction


def log_gamma(x, dps: int = DEFAULT_DPS):
    """log Gamma(x) for x > 0, accurate to the documented budget."""
    work = context(dps + GUARD_DIGITS)
    xm = _positive_arg(work, x, "log_gamma")
    return context(dps).mpf(_log_gamma_raw(work, xm))


def gamma(x, dps: int = DEFAULT_DPS):
    """Gamma(x) = exp(log_gamma(x)) for x > 0."""
    work = context(dps + GUARD_DIGITS)
    xm = _positive_arg(work, x, "gamma")
    return context(dps).mpf(work.exp(_log_gamma_raw(work, xm)))


def beta(x, y, dps: int = DEFAULT_DPS):
    """Euler beta B(x, y) = exp(lgamma(x) + lgamma(y) - lgamma(x+y))."""
    work = context(dps + GUARD_DIGITS)
    xm = _positive_arg(work, x, "beta")
    ym = _positive_arg(work, y, "beta")
    value = work.exp(
        _log_gamma_raw(work, xm)
        + _log_gamma_raw(work, ym)
        - _log_gamma_raw(work, xm + ym)
    )
    return context(dps).mpf(value)


def psi(x, dps: int = DEFAULT_DPS):
    """Digamma psi(x) for x > 0."""
    work = context(dps + GUARD_DIGITS)
    xm = _positive_arg(work, x, "psi")
    return context(dps).mpf(_psi_raw(work, xm, 0))


def psi1(x, dps: int = DEFAULT_DPS):
    """Trigamma psi'(x) for x > 0."""
    work = context(dps + GUARD_DIGITS)
    xm = _positive_arg(work, x, "psi1")
    return context(dps).mpf(_psi_raw(work, xm, 1))


def psi2(x, dps: int = DEFAULT_DPS):
    """Tetragamma psi''(x) for x > 0."""
    work = context(dps + GUARD_DIGITS)
    xm = _positive_arg(work, x, "psi2")
    return context(dps).mpf(_psi_raw(work, xm, 2))


def delta(x, dps: int = DEFAULT_DPS):
    """The gap 1/x^2 - Gamma(x)^2 / Gamma(2x), defined for x > 0."""
    work = context(dps + GUARD_DIGITS)
    xm = _positive_arg(work, x, "delta")
    ratio = work.exp(2 * _log_gamma_raw(work, xm) - _log_gamma_raw(work, 2 * xm))
    return context(dps).mpf(1 / (xm * xm) - ratio)


class DeltaMax(NamedTuple):
    x: object       # maximizer location (mpf)
    value: object   # maximum of delta (mpf)


def locate_delta_max(dps: int = DEFAULT_DPS, xtol: str = "1e-12") -> DeltaMax:
    """Maximize delta over x >= 1: coarse scan, then golden-section.

    The maximum is interior and the function is unimodal on the scanned
    bracket, so a 0.1-step scan over [1, 3] followed by golden-section to
    `xtol` encloses it.
    """
    work = context(dps + GUARD_DIGITS)

    def f(t):
        return 1 / (t * t) - work.exp(
            2 * _log_gamma_raw(work, t) - _log_gamma_raw(work, 2 * t)
        )

    grid = [1 + work.mpf(k) / 10 for k in range(0, 21)]  # 1.0, 1.1, ..., 3.0
    values = [f(t) for t in grid]
    best = max(range(len(grid)), key=lambda k: values[k])
    if best == 0 or best == len(grid) - 1:
        raise RuntimeError("delta maximum did not bracket inside the scan")
    lo, hi = grid[best - 1], grid[best + 1]

    tol = work.mpf(xtol)
    invphi = (work.sqrt(5) - 1) / 2
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    xstar = (a + b) / 2
    out = context(dps)
    return DeltaMax(out.mpf(xstar), out.mpf(f(xstar)))


def maximize_delta(dps: int = DEFAULT_DPS, xtol: str = "1e-12"):
    """Maximum of delta(x) over x >= 1 (argument tolerance `xtol`)."""
    return locate_delta_max(dps, xtol).value

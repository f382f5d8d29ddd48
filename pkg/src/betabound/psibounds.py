"""Rational sandwich bounds for psi' and psi'' from Yang's two-log function.

Yang's function

    L(x, a) = log(x^2 + x + (3a+1)/3) / (90 a^2 + 2)
            + 45 a^2 log(x^2 + x + (15a-1)/(45a)) / (90 a^2 + 2)

has x-derivatives that sandwich psi'(x+1) and psi''(x+1) for the parameter
choices used here (a = 2/5 and a = 4/5 on the outside, the best-possible
constants a1, a2, a3 inside).  The closed forms of L_x and L_xx at a = 2/5
and 4/5 are hard-coded below exactly as displayed in the source material
and independently re-derived by symbolic differentiation, so a
transcription error on either side is caught by ``verify_closed_forms``.

Also here: Alzer's lower bound for the digamma difference
psi(x+1) - psi(x+s), implemented for general truncation order n.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Union

from .polys import BiPoly, Poly, RationalFn, as_fraction
from .specials import DEFAULT_DPS, GUARD_DIGITS, context, psi1, psi2, to_mpf

A_SMALL = Fraction(2, 5)
A_LARGE = Fraction(4, 5)

_X = Poly.x()


def _printed_lx(a: Fraction) -> RationalFn:
    x = _X
    if a == A_SMALL:
        return (3 * (1 + 2 * x) * (61 + 90 * x + 90 * x**2)) / (
            2 * (11 + 15 * x + 15 * x**2) * (5 + 18 * x + 18 * x**2)
        )
    if a == A_LARGE:
        return (3 * (1 + 2 * x) * (199 + 180 * x + 180 * x**2)) / (
            2 * (17 + 15 * x + 15 * x**2) * (11 + 36 * x + 36 * x**2)
        )
    raise KeyError(a)


def _printed_lxx(a: Fraction) -> RationalFn:
    x = _X
    if a == A_SMALL:
        num = (
            4993 + 36546 * x + 110526 * x**2 + 196560 * x**3
            + 219780 * x**4 + 145800 * x**5 + 48600 * x**6
        )
        return (-3 * num) / (
            2 * (11 + 15 * x + 15 * x**2) ** 2 * (5 + 18 * x + 18 * x**2) ** 2
        )
    if a == A_LARGE:
        num = (
            46537 + 322206 * x + 784446 * x**2 + 1118880 * x**3
            + 1045440 * x**4 + 583200 * x**5 + 194400 * x**6
        )
        return (-3 * num) / (
            2 * (17 + 15 * x + 15 * x**2) ** 2 * (11 + 36 * x + 36 * x**2) ** 2
        )
    raise KeyError(a)


PRINTED_LX = {A_SMALL: _printed_lx(A_SMALL), A_LARGE: _printed_lx(A_LARGE)}
PRINTED_LXX = {A_SMALL: _printed_lxx(A_SMALL), A_LARGE: _printed_lxx(A_LARGE)}


def log_arguments(a) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Weights and quadratic constants (w1, w2, c1, c2) of the two log terms.

    Requires a > 1/15 so that both log arguments stay positive for x >= 0.
    """
    a = as_fraction(a)
    if a <= Fraction(1, 15):
        raise ValueError("domain error: parameter a must exceed 1/15")
    denom = 90 * a * a + 2
    w1 = Fraction(1) / denom
    w2 = 45 * a * a / denom
    c1 = (3 * a + 1) / 3
    c2 = (15 * a - 1) / (45 * a)
    return w1, w2, c1, c2


def derive_lx(a) -> RationalFn:
    """First x-derivative of L(., a) as an exact rational function."""
    w1, w2, c1, c2 = log_arguments(a)
    x = _X
    u1 = x**2 + x + c1
    u2 = x**2 + x + c2
    return (w1 * (2 * x + 1)) / u1 + (w2 * (2 * x + 1)) / u2


def derive_lxx(a) -> RationalFn:
    """Second x-derivative of L(., a) as an exact rational function."""
    w1, w2, c1, c2 = log_arguments(a)
    x = _X
    u1 = x**2 + x + c1
    u2 = x**2 + x + c2
    n1 = 2 * u1 - (2 * x + 1) ** 2
    n2 = 2 * u2 - (2 * x + 1) ** 2
    return (w1 * n1) / (u1 * u1) + (w2 * n2) / (u2 * u2)


def closed_form_mismatches() -> list[str]:
    """Labels of printed closed forms that fail the symbolic re-derivation."""
    bad = []
    for a, label in ((A_SMALL, "2/5"), (A_LARGE, "4/5")):
        if not derive_lx(a).equivalent(PRINTED_LX[a]):
            bad.append(f"Lx(., {label})")
        if not derive_lxx(a).equivalent(PRINTED_LXX[a]):
            bad.append(f"Lxx(., {label})")
    return bad


def verify_closed_forms() -> bool:
    """True iff all four printed derivative forms match the symbolic ones."""
    return not closed_form_mismatches()


def eval_poly_mp(p: Poly, xm, ctx):
    """Horner evaluation of an exact polynomial at an mpf point."""
    acc = ctx.mpf(0)
    for c in reversed(p.coeffs):
        acc = acc * xm + to_mpf(ctx, c)
    return acc


def eval_ratfn_mp(rf: RationalFn, xm, ctx):
    return eval_poly_mp(rf.num, xm, ctx) / eval_poly_mp(rf.den, xm, ctx)


def _eval_form(form: RationalFn, x, dps: int):
    if isinstance(x, (int, Fraction)):
        return form(as_fraction(x))
    work = context(dps + GUARD_DIGITS)
    return context(dps).mpf(eval_ratfn_mp(form, to_mpf(work, x), work))


def lx(x, a, dps: int = DEFAULT_DPS) -> Union[Fraction, object]:
    """L_x(x, a) for a in {2/5, 4/5}: exact on rationals, mpf otherwise."""
    a = as_fraction(a)
    if a not in PRINTED_LX:
        raise KeyError("closed forms are available only for a = 2/5 and 4/5")
    return _eval_form(PRINTED_LX[a], x, dps)


def lxx(x, a, dps: int = DEFAULT_DPS) -> Union[Fraction, object]:
    """L_xx(x, a) for a in {2/5, 4/5}: exact on rationals, mpf otherwise."""
    a = as_fraction(a)
    if a not in PRINTED_LXX:
        raise KeyError("closed forms are available only for a = 2/5 and 4/5")
    return _eval_form(PRINTED_LXX[a], x, dps)


def _general_terms(ctx, a):
    am = to_mpf(ctx, a)
    if not am * 15 > 1:
        raise ValueError("domain error: parameter a must exceed 1/15")
    denom = 90 * am * am + 2
    w1 = 1 / denom
    w2 = 45 * am * am / denom
    c1 = (3 * am + 1) / 3
    c2 = (15 * am - 1) / (45 * am)
    return w1, w2, c1, c2


def l_value(x, a, dps: int = DEFAULT_DPS):
    """Yang's L(x, a) itself (high precision), for x >= 0 and a > 1/15."""
    work = context(dps + GUARD_DIGITS)
    w1, w2, c1, c2 = _general_terms(work, a)
    xm = to_mpf(work, x)
    return context(dps).mpf(
        w1 * work.ln(xm * xm + xm + c1) + w2 * work.ln(xm * xm + xm + c2)
    )


def lx_general(x, a, dps: int = DEFAULT_DPS):
    """L_x(x, a) for any a > 1/15 (high precision)."""
    work = context(dps + GUARD_DIGITS)
    w1, w2, c1, c2 = _general_terms(work, a)
    xm = to_mpf(work, x)
    two_x1 = 2 * xm + 1
    value = w1 * two_x1 / (xm * xm + xm + c1) + w2 * two_x1 / (xm * xm + xm + c2)
    return context(dps).mpf(value)


def lxx_general(x, a, dps: int = DEFAULT_DPS):
    """L_xx(x, a) for any a > 1/15 (high precision)."""
    work = context(dps + GUARD_DIGITS)
    w1, w2, c1, c2 = _general_terms(work, a)
    xm = to_mpf(work, x)
    u1 = xm * xm + xm + c1
    u2 = xm * xm + xm + c2
    sq = (2 * xm + 1) ** 2
    value = w1 * (2 * u1 - sq) / (u1 * u1) + w2 * (2 * u2 - sq) / (u2 * u2)
    return context(dps).mpf(value)


def error_budget(dps: int):
    """Certification threshold for high-precision inequality margins.

    1e-30 at the library's standard 50-digit precision; widened when the
    caller asks for fewer digits so that arithmetic noise stays far below
    the certification line.
    """
    return context(dps).mpf(10) ** (-min(30, dps - 2))


def sandwich_margins(x, dps: int = DEFAULT_DPS) -> dict:
    """The four sandwich margins at x > 0 (all positive when the bounds hold).

    Keys: lower/upper margins of L_x(., 4/5) < psi'(x+1) < L_x(., 2/5) and
    of L_xx(., 2/5) < psi''(x+1) < L_xx(., 4/5).
    """
    work = context(dps + GUARD_DIGITS)
    xm = to_mpf(work, x)
    if not xm > 0:
        raise ValueError("domain error: sandwich bounds require x > 0")
    p1 = to_mpf(work, psi1(xm + 1, dps + GUARD_DIGITS))
    p2 = to_mpf(work, psi2(xm + 1, dps + GUARD_DIGITS))
    out = context(dps)
    return {
        "psi1_above_lx45": out.mpf(p1 - eval_ratfn_mp(PRINTED_LX[A_LARGE], xm, work)),
        "psi1_below_lx25": out.mpf(eval_ratfn_mp(PRINTED_LX[A_SMALL], xm, work) - p1),
        "psi2_above_lxx25": out.mpf(p2 - eval_ratfn_mp(PRINTED_LXX[A_SMALL], xm, work)),
        "psi2_below_lxx45": out.mpf(eval_ratfn_mp(PRINTED_LXX[A_LARGE], xm, work) - p2),
    }


def sandwich_check(x, dps: int = DEFAULT_DPS) -> bool:
    """True iff both sandwiches hold at x with margin over 10x the budget.

    Margins inside the budget band are neither certifiable nor refutable
    and raise instead of guessing.
    """
    threshold = 10 * error_budget(dps)
    margins = sandwich_margins(x, dps)
    if all(m > threshold for m in margins.values()):
        return True
    if any(m < -threshold for m in margins.values()):
        return False
    raise ValueError("inconclusive: sandwich margin within the error budget")


def alzer_psi_diff_lower(x, s, n: int, dps: int = DEFAULT_DPS):
    """Alzer's lower bound for psi(x+1) - psi(x+s).

    Value of (1-s) [ 1/(x+s+n) + sum_{i=0}^{n-1} 1/((x+i+1)(x+i+s)) ]
    for x > 0, s in (0, 1), integer n >= 0.  Exact Fraction on rational
    input, mpf otherwise.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError("domain error: n must be a nonnegative integer")
    exact = isinstance(x, (int, Fraction)) and isinstance(s, (int, Fraction))
    if exact:
        xq, sq = as_fraction(x), as_fraction(s)
        if not 0 < sq < 1:
            raise ValueError("domain error: s must lie in (0, 1)")
        if xq <= 0:
            raise ValueError("domain error: x must be positive")
        acc = Fraction(1) / (xq + sq + n)
        for i in range(n):
            acc += Fraction(1) / ((xq + i + 1) * (xq + i + sq))
        return (1 - sq) * acc
    work = context(dps + GUARD_DIGITS)
    xm, sm = to_mpf(work, x), to_mpf(work, s)
    if not (0 < sm < 1):
        raise ValueError("domain error: s must lie in (0, 1)")
    if not xm > 0:
        raise ValueError("domain error: x must be positive")
    acc = 1 / (xm + sm + n)
    for i in range(n):
        acc += 1 / ((xm + i + 1) * (xm + i + sm))
    return context(dps).mpf((1 - sm) * acc)


@lru_cache(maxsize=None)
def alzer_bracket_rf(n: int) -> RationalFn:
    """The n-term bound as a bivariate rational function.

    Convention: the digamma difference being bounded is
    psi(y+1) - psi(y+x), i.e. the offset s is the variable x and the
    argument is the variable y (the orientation used in the main proof).
    """
    x, y = BiPoly.x(), BiPoly.y()
    acc = RationalFn(BiPoly.const(1), x + y + n)
    for i in range(n):
        acc = acc + 1 / ((y + i + 1) * (y + i + x))
    return (1 - x) * acc

"""Sign criterion for one-sign-change polynomials and certified root enclosures.

A polynomial whose coefficient sequence is nonnegative up to some index and
nonpositive afterwards (with at least one strict coefficient on each side)
has exactly one positive crossing root: it is positive below it and negative
above it.  The mirror image (nonpositive then nonnegative) behaves the same
with signs reversed.  This module classifies coefficient patterns, turns a
single exact evaluation into a one-sided positivity certificate, and
encloses the crossing root by bisection on exact sign evaluations.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .polys import Poly, as_fraction

DEFAULT_WIDTH = Fraction(1, 10**6)


class PatternKind(enum.Enum):
    PN = "PN"                 # nonnegative block, then nonpositive block
    NP = "NP"                 # nonpositive block, then nonnegative block
    ALL_NONNEG = "AllNonneg"
    ALL_NONPOS = "AllNonpos"
    OTHER = "Other"


@dataclass(frozen=True)
class SignPattern:
    kind: PatternKind
    split_index: Optional[int] = None  # last index carrying the leading sign


@dataclass(frozen=True)
class Enclosure:
    """Interval [lo, hi] with exactly opposite signs at the endpoints."""

    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, value) -> bool:
        v = as_fraction(value)
        return self.lo <= v <= self.hi


@dataclass(frozen=True)
class SignReport:
    pattern: SignPattern
    crossing: Optional[Enclosure] = None
    certificate: Optional[tuple[Fraction, Fraction]] = None  # (point, value)
    note: str = ""


def classify(p: Poly) -> SignPattern:
    """Classify the coefficient sign pattern of a nonzero polynomial.

    Zero coefficients may sit inside either block.  More than one sign
    change among the nonzero coefficients yields ``OTHER``.
    """
    if p.is_zero:
        raise ValueError("degenerate input: zero polynomial")
    signs = [(k, 1 if c > 0 else -1) for k, c in enumerate(p.coeffs) if c != 0]
    lead = signs[0][1]
    changes = sum(
        1 for (_, a), (_, b) in zip(signs, signs[1:]) if a != b
    )
    if changes == 0:
        kind = PatternKind.ALL_NONNEG if lead > 0 else PatternKind.ALL_NONPOS
        return SignPattern(kind, None)
    if changes > 1:
        return SignPattern(PatternKind.OTHER, None)
    split = max(k for k, s in signs if s == lead)
    kind = PatternKind.PN if lead > 0 else PatternKind.NP
    return SignPattern(kind, split)


def _require(p: Poly, kind: PatternKind) -> None:
    got = classify(p).kind
    if got is not kind:
        raise ValueError(
            f"criterion inapplicable: expected {kind.value} pattern, got {got.value}"
        )


def positive_below(p: Poly, x1) -> bool:
    """For a PN polynomial: p(x1) > 0 certifies p > 0 on (0, x1].

    An exact zero at x1 returns False (the conclusion only holds strictly
    below the crossing root); see ``report_positive_below`` for the flag.
    """
    _require(p, PatternKind.PN)
    return p(as_fraction(x1)) > 0


def negative_above(p: Poly, x2) -> bool:
    """For a PN polynomial: p(x2) < 0 certifies p < 0 on [x2, oo)."""
    _require(p, PatternKind.PN)
    return p(as_fraction(x2)) < 0


def negative_below(p: Poly, x1) -> bool:
    """For an NP polynomial: p(x1) < 0 certifies p < 0 on (0, x1]."""
    _require(p, PatternKind.NP)
    return p(as_fraction(x1)) < 0


def positive_above(p: Poly, x2) -> bool:
    """For an NP polynomial: p(x2) > 0 certifies p > 0 on [x2, oo)."""
    _require(p, PatternKind.NP)
    return p(as_fraction(x2)) > 0


def report_positive_below(p: Poly, x1) -> SignReport:
    """positive_below with the exact evaluation recorded as a certificate."""
    pattern = classify(p)
    if pattern.kind is not PatternKind.PN:
        raise ValueError(
            f"criterion inapplicable: expected PN pattern, got {pattern.kind.value}"
        )
    point = as_fraction(x1)
    value = p(point)
    note = "boundary root" if value == 0 else ""
    return SignReport(pattern, certificate=(point, value), note=note)


def isolate_crossing(p: Poly, lo, hi, width=DEFAULT_WIDTH) -> Enclosure:
    """Bisect [lo, hi] down to `width` around the unique sign change.

    Endpoint signs must already be strictly opposite; every returned
    enclosure keeps that property, so it certifiably brackets the root.
    """
    lo, hi, width = as_fraction(lo), as_fraction(hi), as_fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    _require_crossing_kind(p)
    flo, fhi = p(lo), p(hi)
    if flo == 0 or fhi == 0 or (flo > 0) == (fhi > 0):
        raise ValueError("no bracket: endpoint signs are not strictly opposite")
    while hi - lo > width:
        mid = (lo + hi) / 2
        fm = p(mid)
        if fm == 0:
            # Exact hit: the crossing is strict on both sides, so nudge
            # within the current bracket to restore opposite endpoint signs.
            step = min(width / 2, (hi - lo) / 4)
            lo2, hi2 = mid - step, mid + step
            if (p(lo2) > 0) != (p(hi2) > 0):
                return Enclosure(lo2, hi2)
            raise ValueError("no bracket: flat region around exact root")
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    return Enclosure(lo, hi)


def _require_crossing_kind(p: Poly) -> None:
    kind = classify(p).kind
    if kind not in (PatternKind.PN, PatternKind.NP):
        raise ValueError(
            f"criterion inapplicable: expected PN or NP pattern, got {kind.value}"
        )


def verify_root_ordering(
    polys: Sequence[Poly], lo, hi, width=DEFAULT_WIDTH
) -> bool:
    """True iff the crossing-root enclosures are pairwise disjoint, increasing.

    Certifies the chain "p_j negative implies p_{j+1} negative" (NP case) on
    the bracket.  Enclosures that overlap at the requested width cannot be
    ordered and raise instead of guessing.
    """
    enclosures = [isolate_crossing(p, lo, hi, width) for p in polys]
    ordered = True
    for a, b in zip(enclosures, enclosures[1:]):
        if a.hi < b.lo:
            continue
        if b.hi < a.lo:
            ordered = False
            continue
        raise ValueError("refine width: enclosures overlap at requested width")
    return ordered


@dataclass(frozen=True)
class RootDigits:
    """Outcome of checking printed decimal digits against an enclosure."""

    prefix: str
    enclosure: Enclosure
    certified: bool      # every point of the enclosure truncates to prefix
    consistent: bool     # enclosure meets [prefix, prefix + 1 ulp]
    note: str = ""


def truncate_decimal(value: Fraction, places: int) -> str:
    """Decimal truncation toward zero with exactly `places` digits."""
    sign = "-" if value < 0 else ""
    scaled = abs(value) * 10**places
    digits = int(scaled)  # floor for nonnegative
    whole, frac = divmod(digits, 10**places)
    return f"{sign}{whole}.{frac:0{places}d}"


def check_printed_digits(enclosure: Enclosure, prefix: str) -> RootDigits:
    """Compare a printed decimal prefix (a truncation) with an enclosure."""
    places = len(prefix.split(".")[1])
    t = Fraction(prefix)
    ulp = Fraction(1, 10**places)
    certified = (
        truncate_decimal(enclosure.lo, places) == prefix
        and truncate_decimal(enclosure.hi, places) == prefix
    )
    consistent = not (enclosure.hi < t or enclosure.lo > t + ulp)
    note = "" if certified else "width too large to certify the printed digits"
    return RootDigits(prefix, enclosure, certified, consistent, note)

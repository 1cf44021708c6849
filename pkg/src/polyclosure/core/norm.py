"""The l1 coefficient norm with an exact path and an outward-rounded interval path."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

import gmpy2
from gmpy2 import mpfr, mpq

from .gaussian import GaussianRational

DEFAULT_PRECISION = 128


def round_down(q, precision: int) -> mpfr:
    with gmpy2.context(precision=precision, round=gmpy2.RoundDown):
        return mpfr(q)


def round_up(q, precision: int) -> mpfr:
    with gmpy2.context(precision=precision, round=gmpy2.RoundUp):
        return mpfr(q)


def sqrt_bounds(q: mpq, bits: int):
    """Rationals ``lo <= sqrt(q) <= hi`` with ``hi - lo <= 2^-bits / den``."""
    num, den = q.numerator, q.denominator
    scale = gmpy2.mpz(1) << bits
    t = gmpy2.isqrt(num * den * scale * scale)
    lo = mpq(t, den * scale)
    if t * t == num * den * scale * scale:
        return lo, lo
    return lo, mpq(t + 1, den * scale)


@dataclass(frozen=True)
class NormValue:
    """A nonnegative real known exactly or enclosed in ``[lo, hi]``.

    ``lo``/``hi`` are mpfr values at ``precision`` bits rounded outward.  When
    ``exact`` is set it is a rational and ``lo <= exact <= hi`` holds.
    """

    exact: Optional[mpq]
    lo: mpfr
    hi: mpfr
    precision: int = DEFAULT_PRECISION

    @classmethod
    def from_exact(cls, q, precision: int = DEFAULT_PRECISION) -> "NormValue":
        q = mpq(q)
        return cls(q, round_down(q, precision), round_up(q, precision), precision)

    @classmethod
    def from_bounds(cls, lo_q, hi_q, precision: int = DEFAULT_PRECISION) -> "NormValue":
        return cls(None, round_down(lo_q, precision), round_up(hi_q, precision), precision)

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    @property
    def width(self) -> mpfr:
        with gmpy2.context(precision=self.precision, round=gmpy2.RoundUp):
            return self.hi - self.lo

    def midpoint(self) -> float:
        if self.exact is not None:
            return float(self.exact)
        return float((self.lo + self.hi) / 2)

    def __float__(self):
        return self.midpoint()

    def as_fraction(self) -> Optional[Fraction]:
        if self.exact is None:
            return None
        return Fraction(int(self.exact.numerator), int(self.exact.denominator))

    # certified comparisons: True only when the enclosures prove the relation
    def certainly_le(self, other: "NormValue") -> bool:
        if self.exact is not None and other.exact is not None:
            return self.exact <= other.exact
        return self.hi <= other.lo

    def possibly_le(self, other: "NormValue") -> bool:
        """False only when the enclosures prove ``self > other``."""
        if self.exact is not None and other.exact is not None:
            return self.exact <= other.exact
        return self.lo <= other.hi

    def __add__(self, other: "NormValue") -> "NormValue":
        p = max(self.precision, other.precision)
        if self.exact is not None and other.exact is not None:
            return NormValue.from_exact(self.exact + other.exact, p)
        with gmpy2.context(precision=p, round=gmpy2.RoundDown):
            lo = self.lo + other.lo
        with gmpy2.context(precision=p, round=gmpy2.RoundUp):
            hi = self.hi + other.hi
        return NormValue(None, lo, hi, p)

    def __mul__(self, other: "NormValue") -> "NormValue":
        p = max(self.precision, other.precision)
        if self.exact is not None and other.exact is not None:
            return NormValue.from_exact(self.exact * other.exact, p)
        with gmpy2.context(precision=p, round=gmpy2.RoundDown):
            lo = self.lo * other.lo
        with gmpy2.context(precision=p, round=gmpy2.RoundUp):
            hi = self.hi * other.hi
        return NormValue(None, lo, hi, p)

    def to_json(self) -> dict:
        out = {"lo": format_mpfr(self.lo), "hi": format_mpfr(self.hi), "precision": self.precision}
        if self.exact is not None:
            out["exact"] = _qtext(self.exact)
        return out


def _qtext(q: mpq) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_mpfr(x: mpfr) -> str:
    """Shortest decimal that rounds back to ``x`` at its own precision."""
    return gmpy2.format(x, ".17g") if x.precision <= 53 else x.__format__(".40g")


def norm_of_coefficients(coeffs: Iterable[GaussianRational], precision: int = DEFAULT_PRECISION) -> NormValue:
    """Sum of moduli of the given coefficients."""
    exact_sum = mpq(0)
    lo_sum = mpq(0)
    hi_sum = mpq(0)
    inexact = False
    bits = precision + 16
    for c in coeffs:
        a = c.abs_exact()
        if a is not None:
            exact_sum += a
            continue
        inexact = True
        lo, hi = sqrt_bounds(c.abs_squared(), bits)
        lo_sum += lo
        hi_sum += hi
    if not inexact:
        return NormValue.from_exact(exact_sum, precision)
    return NormValue.from_bounds(exact_sum + lo_sum, exact_sum + hi_sum, precision)


def norm_l1(f, precision: int = DEFAULT_PRECISION) -> NormValue:
    """l1 norm of a polynomial (or anything with a ``terms`` mapping)."""
    return norm_of_coefficients(f.terms.values(), precision)


def series_norm_partial(s, precision: int = DEFAULT_PRECISION) -> NormValue:
    """l1 norm of the stored truncation; a lower bound for the full series norm."""
    return norm_of_coefficients(s.terms.values(), precision)

"""Exact Gaussian rationals a + b*i with a, b in Q."""

from __future__ import annotations

import numbers
from fractions import Fraction

import gmpy2
from gmpy2 import mpq

_ZERO = mpq(0)
_ONE = mpq(1)


def to_mpq(x) -> mpq:
    """Coerce an int / Fraction / mpq / decimal string to an exact mpq."""
    if isinstance(x, type(_ZERO)):
        return x
    if isinstance(x, bool):
        return mpq(int(x))
    if isinstance(x, (int, Fraction)):
        return mpq(x)
    if isinstance(x, str):
        return mpq(Fraction(x))
    if isinstance(x, float):
        # floats are accepted only when they are exactly representable rationals
        return mpq(Fraction(x))
    if isinstance(x, numbers.Rational):
        return mpq(x.numerator, x.denominator)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


class GaussianRational:
    """Immutable exact complex number with rational real and imaginary parts.

    Components are stored as ``gmpy2.mpq`` which is always kept in lowest
    terms with a positive denominator.
    """

    __slots__ = ("re", "im", "_hash")

    def __init__(self, re=0, im=0):
        self.re = to_mpq(re)
        self.im = to_mpq(im)
        self._hash = None

    @classmethod
    def _raw(cls, re: mpq, im: mpq) -> "GaussianRational":
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        obj._hash = None
        return obj

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            return cls(Fraction(x.real), Fraction(x.imag))
        return cls._raw(to_mpq(x), _ZERO)

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def is_one(self) -> bool:
        return self.re == 1 and not self.im

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        return GaussianRational._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        return GaussianRational._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussianRational._raw(a * c, _ZERO)
        return GaussianRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussianRational._raw(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        if not other.im:
            if not other.re:
                raise ZeroDivisionError("division by zero Gaussian rational")
            return GaussianRational._raw(self.re / other.re, self.im / other.re)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = GaussianRational._raw(_ONE, _ZERO)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self.re, -self.im)

    def abs_squared(self) -> mpq:
        return self.re * self.re + self.im * self.im

    def abs_exact(self):
        """|z| as an mpq when it is rational, else None."""
        q = self.abs_squared()
        if not q:
            return _ZERO
        num, den = q.numerator, q.denominator
        if gmpy2.is_square(num) and gmpy2.is_square(den):
            return mpq(gmpy2.isqrt(num), gmpy2.isqrt(den))
        return None

    # -- comparison / hashing ---------------------------------------------
    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)) or isinstance(other, type(_ZERO)):
            return not self.im and self.re == other
        if isinstance(other, complex):
            return complex(self) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if not self.im:
                self._hash = hash(self.re)
            else:
                self._hash = hash((self.re, self.im))
        return self._hash

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def to_fraction_pair(self):
        return Fraction(int(self.re.numerator), int(self.re.denominator)), Fraction(
            int(self.im.numerator), int(self.im.denominator)
        )

    # -- text ---------------------------------------------------------------
    def __repr__(self):
        return f"GaussianRational({_qstr(self.re)!r}, {_qstr(self.im)!r})"

    def __str__(self):
        return format_gaussian(self)


def _qstr(q: mpq) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_gaussian(z: GaussianRational) -> str:
    """Canonical text: ``a/b``, ``c/di`` or ``(a/b+c/di)``."""
    if not z.im:
        return _qstr(z.re)
    im = z.im
    if im.denominator == 1:
        im_txt = "i" if abs(im.numerator) == 1 else f"{abs(im.numerator)}i"
    else:
        im_txt = f"{abs(im.numerator)}/{im.denominator}i"
    if not z.re:
        return ("-" if im < 0 else "") + im_txt
    sign = "-" if im < 0 else "+"
    return f"({_qstr(z.re)}{sign}{im_txt})"


ZERO = GaussianRational._raw(_ZERO, _ZERO)
ONE = GaussianRational._raw(_ONE, _ZERO)
I = GaussianRational._raw(_ZERO, _ONE)


def gq(re=0, im=0) -> GaussianRational:
    """Shorthand constructor."""
    return GaussianRational(re, im)


def unit_circle_point(t) -> GaussianRational:
    """Rational point ((1-t^2) + 2t i)/(1+t^2) on the unit circle."""
    t = to_mpq(t)
    d = 1 + t * t
    return GaussianRational._raw((1 - t * t) / d, (2 * t) / d)


def limit_denominator(z: complex, max_den: int = 10**4) -> GaussianRational:
    """Nearest Gaussian rational with bounded denominators (per component)."""
    re = Fraction(z.real).limit_denominator(max_den)
    im = Fraction(z.imag).limit_denominator(max_den)
    return GaussianRational(re, im)

"""Exact power series truncated by total degree."""

from __future__ import annotations

from typing import Dict, Mapping

from .gaussian import GaussianRational
from .polynomial import Monomial, Polynomial


class TruncatedSeries:
    """Power series in ``n`` variables known up to total degree ``D``.

    Arithmetic discards every monomial of total degree above the smaller of
    the operands' truncation degrees.
    """

    __slots__ = ("n", "D", "terms")

    def __init__(self, n: int, D: int, terms: Mapping[Monomial, GaussianRational] | None = None):
        if D < 0:
            raise ValueError("truncation degree must be >= 0")
        self.n = n
        self.D = D
        self.terms: Dict[Monomial, GaussianRational] = {}
        for m, c in (terms or {}).items():
            c = GaussianRational.coerce(c)
            if c and sum(m) <= D:
                self.terms[tuple(m)] = c

    @classmethod
    def from_polynomial(cls, f: Polynomial, D: int) -> "TruncatedSeries":
        return cls(f.n, D, f.terms)

    def to_polynomial(self) -> Polynomial:
        return Polynomial(self.n, self.terms)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        other = self._lift(other)
        D = min(self.D, other.D)
        out = self.to_polynomial() + other.to_polynomial()
        return TruncatedSeries(self.n, D, out.terms)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        other = self._lift(other)
        D = min(self.D, other.D)
        out = self.to_polynomial() - other.to_polynomial()
        return TruncatedSeries(self.n, D, out.terms)

    def __mul__(self, other) -> "TruncatedSeries":
        other = self._lift(other)
        D = min(self.D, other.D)
        terms: Dict[Monomial, GaussianRational] = {}
        for ma, ca in self.terms.items():
            da = sum(ma)
            for mb, cb in other.terms.items():
                if da + sum(mb) > D:
                    continue
                m = tuple(x + y for x, y in zip(ma, mb))
                terms[m] = terms[m] + ca * cb if m in terms else ca * cb
        return TruncatedSeries(self.n, D, terms)

    def _lift(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, Polynomial):
            return TruncatedSeries.from_polynomial(other, self.D)
        return TruncatedSeries(self.n, self.D, {(0,) * self.n: other})

    def coefficient(self, m: Monomial) -> GaussianRational:
        return self.terms.get(tuple(m), GaussianRational(0))

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedSeries)
            and self.n == other.n
            and self.D == other.D
            and self.terms == other.terms
        )

    def __repr__(self):
        return f"TruncatedSeries(n={self.n}, D={self.D}, {self.to_polynomial()})"


def series_invert(f: Polynomial, D: int) -> TruncatedSeries:
    """Exact inverse of ``f`` modulo monomials of total degree > D."""
    c0 = f.constant_term()
    if not c0:
        raise ZeroDivisionError("series inversion needs a nonzero constant term")
    inv0 = c0.inverse()
    by_deg: Dict[int, list] = {}
    for m, c in f.terms.items():
        d = sum(m)
        if 0 < d <= D:
            by_deg.setdefault(d, []).append((m, c))
    g_by_deg = [{(0,) * f.n: inv0}]
    for d in range(1, D + 1):
        acc: Dict[Monomial, GaussianRational] = {}
        for k in range(1, d + 1):
            fk = by_deg.get(k)
            if not fk:
                continue
            for mg, cg in g_by_deg[d - k].items():
                for mf, cf in fk:
                    m = tuple(x + y for x, y in zip(mf, mg))
                    v = cf * cg
                    acc[m] = acc[m] + v if m in acc else v
        g_by_deg.append({m: -(c * inv0) for m, c in acc.items() if c})
    terms = {}
    for layer in g_by_deg:
        terms.update(layer)
    return TruncatedSeries(f.n, D, terms)

"""The functions g_l = d_Y^l f / f = sum_k g_lk(X) Y^k for f with no zeros on B x {0}.

Writing f = sum_m f_m(X) Y^m, the expansion 1/f = sum_k h_k(X) Y^k satisfies
h_0 = 1/f_0 and h_k = -(1/f_0) sum_{m=1..d2} f_m h_{k-m}; then
g_lk = sum_{m >= l} m!/(m-l)! f_m h_{k-m+l}.

Two evaluation routes:

* exact power series in X over Q(i), truncated at a chosen X-degree
  (``g_series_table``), used for identities;
* exact values at Gaussian-rational points x of the closed disc
  (``g_values_at``), used for the pointwise bound on the unit circle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..core import univariate as U
from ..core.gaussian import GaussianRational, ONE, ZERO, unit_circle_point
from ..core.polynomial import Polynomial
from ..disc import position_of_disc, Position
from ..ideals.roots import isolate_roots


class SeriesPreconditionError(ValueError):
    """f(X, 0) vanishes somewhere on the closed unit disc."""


def y_coefficients(f: Polynomial) -> List[List[GaussianRational]]:
    """f = sum_m f_m(X) Y^m as ascending X-coefficient lists f_m."""
    if f.n != 2:
        raise ValueError("bivariate polynomial expected")
    d2 = f.degree_in(2)
    rows = [[] for _ in range(d2 + 1)]
    for (a, b), c in f.terms.items():
        row = rows[b]
        if len(row) <= a:
            row.extend([ZERO] * (a + 1 - len(row)))
        row[a] = row[a] + c
    return [U.trim(r) for r in rows]


def check_no_zeros_on_disc(f: Polynomial) -> None:
    f0 = y_coefficients(f)[0]
    if not f0:
        raise SeriesPreconditionError("f(X, 0) is identically zero")
    if len(f0) == 1:
        return
    for d in isolate_roots(U.squarefree_part(f0)):
        if position_of_disc(d) is not Position.EXTERIOR:
            raise SeriesPreconditionError(f"f(X, 0) has a root in the closed unit disc near {complex(d.center)}")


def falling(m: int, l: int) -> int:
    out = 1
    for t in range(l):
        out *= m - t
    return out


def _series_div(num: Sequence, den: Sequence, D: int) -> List[GaussianRational]:
    """Power series num/den truncated at degree D (den[0] != 0)."""
    inv0 = den[0].inverse()
    out = []
    for j in range(D + 1):
        acc = num[j] if j < len(num) else ZERO
        for i in range(1, min(j, len(den) - 1) + 1):
            acc = acc - den[i] * out[j - i]
        out.append(acc * inv0)
    return out


def _series_mul(a: Sequence, b: Sequence, D: int) -> List[GaussianRational]:
    out = [ZERO] * (D + 1)
    for i, x in enumerate(a[: D + 1]):
        if not x:
            continue
        for j, y in enumerate(b[: D + 1 - i]):
            if y:
                out[i + j] = out[i + j] + x * y
    return out


@dataclass
class SeriesFamily:
    """Truncated g_lk(X) (coefficients a_lkj for j <= x_degree) plus boundary sup data."""

    f: Polynomial
    d2: int
    l_max: int
    k_max: int
    x_degree: int
    table: Dict[Tuple[int, int], List[GaussianRational]]
    samples: List[GaussianRational] = field(default_factory=list)
    boundary_sup: Dict[Tuple[int, int], float] = field(default_factory=dict)

    def g(self, l: int, k: int) -> Polynomial:
        """g_lk truncated, as a polynomial in X1 (n = 2)."""
        coeffs = self.table[(l, k)]
        return Polynomial(2, {(j, 0): c for j, c in enumerate(coeffs) if c})

    def coefficient(self, l: int, k: int, j: int) -> GaussianRational:
        return self.table[(l, k)][j]

    def g_l(self, l: int) -> Polynomial:
        """sum_k g_lk(X) Y^k truncated to the box X-degree <= x_degree, Y-degree <= k_max."""
        terms = {}
        for k in range(self.k_max + 1):
            for j, c in enumerate(self.table[(l, k)]):
                if c:
                    terms[(j, k)] = c
        return Polynomial(2, terms)

    def reconstruction_holds(self, l: int) -> bool:
        """g_l * f == d_Y^l f on the truncation box (exact)."""
        lhs = self.g_l(l) * self.f
        rhs = self.f.partial_derivative(2, l)
        box = lambda p: {m: c for m, c in p.terms.items() if m[0] <= self.x_degree and m[1] <= self.k_max}
        return box(lhs) == box(rhs)


def g_series_table(f: Polynomial, l_max: int, k_max: int, x_degree: int = 20,
                   x_samples: Optional[Sequence[GaussianRational]] = None) -> SeriesFamily:
    check_no_zeros_on_disc(f)
    fm = y_coefficients(f)
    d2 = len(fm) - 1
    f0 = fm[0]
    D = x_degree
    h: List[List[GaussianRational]] = []
    K = k_max + d2
    for k in range(K + 1):
        acc = [ZERO] * (D + 1)
        if k == 0:
            acc[0] = ONE
        for m in range(1, min(k, d2) + 1):
            prod = _series_mul(fm[m], h[k - m], D)
            acc = [a - p for a, p in zip(acc, prod)]
        h.append(_series_div(acc, f0, D))
    table = {}
    for l in range(l_max + 1):
        for k in range(k_max + 1):
            acc = [ZERO] * (D + 1)
            for m in range(l, d2 + 1):
                idx = k - m + l
                if idx < 0:
                    continue
                prod = _series_mul(fm[m], h[idx], D)
                c = falling(m, l)
                acc = [a + c * p for a, p in zip(acc, prod)]
            table[(l, k)] = acc
    fam = SeriesFamily(f, d2, l_max, k_max, D, table)
    if x_samples:
        fam.samples = list(x_samples)
        for x in x_samples:
            vals = g_values_at(f, x, l_max, k_max)
            for key, v in vals.items():
                a = math.sqrt(float(v.abs_squared()))
                if a > fam.boundary_sup.get(key, -1.0):
                    fam.boundary_sup[key] = a
    return fam


def g_values_at(f: Polynomial, x, l_max: int, k_max: int) -> Dict[Tuple[int, int], GaussianRational]:
    """Exact g_lk(x) for a Gaussian-rational x with f(x, 0) != 0."""
    x = GaussianRational.coerce(x)
    fm = [U.evaluate(c, x) for c in y_coefficients(f)]
    d2 = len(fm) - 1
    if not fm[0]:
        raise SeriesPreconditionError("f(x, 0) = 0 at a sample point")
    inv0 = fm[0].inverse()
    K = k_max + d2
    h = []
    for k in range(K + 1):
        acc = ONE if k == 0 else ZERO
        for m in range(1, min(k, d2) + 1):
            acc = acc - fm[m] * h[k - m]
        h.append(acc * inv0)
    out = {}
    for l in range(l_max + 1):
        for k in range(k_max + 1):
            acc = ZERO
            for m in range(l, d2 + 1):
                idx = k - m + l
                if idx >= 0:
                    acc = acc + falling(m, l) * fm[m] * h[idx]
            out[(l, k)] = acc
    return out


def boundary_samples(count: int = 64) -> List[GaussianRational]:
    """Rational points of the unit circle near the angles 2*pi*j/count."""
    out = []
    for j in range(count):
        theta = 2 * math.pi * j / count
        if abs(math.cos(theta / 2)) < 1e-12:
            out.append(GaussianRational(-1))
            continue
        t = Fraction(math.tan(theta / 2)).limit_denominator(1000)
        out.append(unit_circle_point(t))
    return out


def coefficient_bound(d2: int, l: int, k: int, with_factorial: bool = True) -> int:
    """binom(d2, l) * binom(l+k-1, l-1), times l! when ``with_factorial``.

    The l! comes from the falling factorial m!/(m-l)! in d_Y^l Y^m; without
    it the bound already fails at k = 0 for f = X1*X2^2 - 1.
    """
    if l == 0:
        return 1 if k == 0 else 0
    b = math.comb(d2, l) * math.comb(l + k - 1, l - 1)
    return b * math.factorial(l) if with_factorial else b


@dataclass
class BoundCheck:
    violations: List[dict]
    checked: int
    max_ratio: float

    @property
    def ok(self) -> bool:
        return not self.violations


def check_coefficient_bound(f: Polynomial, k_max: int = 50, samples: Optional[Sequence] = None,
                            with_factorial: bool = True) -> BoundCheck:
    """Exact check of |g_lk(x)| <= bound at sampled boundary points, 1 <= l <= d2."""
    check_no_zeros_on_disc(f)
    samples = boundary_samples() if samples is None else samples
    d2 = f.degree_in(2)
    viol, checked, worst = [], 0, 0.0
    for x in samples:
        vals = g_values_at(f, x, d2, k_max)
        for l in range(1, d2 + 1):
            for k in range(k_max + 1):
                b = coefficient_bound(d2, l, k, with_factorial)
                a2 = vals[(l, k)].abs_squared()
                checked += 1
                if b:
                    worst = max(worst, math.sqrt(float(a2)) / b)
                if a2 > b * b:
                    viol.append({"x": str(x), "l": l, "k": k, "abs": math.sqrt(float(a2)), "bound": b})
    return BoundCheck(viol, checked, worst)

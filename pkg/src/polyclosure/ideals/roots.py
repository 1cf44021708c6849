"""Certified complex roots of univariate polynomials over Q(i).

Approximate roots come from ``mpmath.polyroots``.  Each approximation ``c_k``
is rounded to a dyadic Gaussian rational and enclosed in the disc of radius
``deg * |W_k|`` around it, where ``W_k = p(c_k) / (lc * prod_{j != k}(c_k - c_j))``
is the Weierstrass correction evaluated exactly.  The union of these discs
contains all roots and each connected component holds as many roots as
centers, so pairwise disjoint discs isolate one simple root each.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

import gmpy2
import mpmath
from gmpy2 import mpq

from ..core import univariate as U
from ..core.gaussian import GaussianRational
from ..core.norm import sqrt_bounds


class RootIsolationError(RuntimeError):
    pass


@dataclass(frozen=True)
class ComplexDisc:
    """Closed disc ``|z - center| <= radius`` holding exactly one root.

    ``exact`` is set when the root is a Gaussian rational (then radius is 0).
    """

    center: GaussianRational
    radius: mpq
    exact: Optional[GaussianRational] = None

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    def __complex__(self):
        return complex(self.center)

    def abs2_bounds(self):
        """Rational bounds on |z|^2 over the disc."""
        if self.exact is not None:
            a = self.exact.abs_squared()
            return a, a
        c2 = self.center.abs_squared()
        lo_c, hi_c = sqrt_bounds(c2, 80) if c2 else (mpq(0), mpq(0))
        hi = (hi_c + self.radius) ** 2
        lo_abs = lo_c - self.radius
        lo = lo_abs * lo_abs if lo_abs > 0 else mpq(0)
        return lo, hi

    def to_json(self) -> dict:
        out = {"center": str(self.center), "radius": _qtext(self.radius)}
        if self.exact is not None:
            out["exact"] = str(self.exact)
        return out


def _qtext(q) -> str:
    q = mpq(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def mpf_to_mpq(x) -> mpq:
    if not isinstance(x, mpmath.mpf):
        x = mpmath.mpf(x)
    sign, man, exp, _ = x._mpf_
    man = -int(man) if sign else int(man)
    if exp >= 0:
        return mpq(int(man) << exp)
    return mpq(int(man), 1 << (-exp))


def mpc_to_gq(z) -> GaussianRational:
    if isinstance(z, mpmath.mpf):
        return GaussianRational._raw(mpf_to_mpq(z), mpq(0))
    return GaussianRational._raw(mpf_to_mpq(z.real), mpf_to_mpq(z.imag))


def q_to_mpf(q):
    """Nearest mpf at the current mpmath precision."""
    return mpmath.mpf(int(q.numerator)) / int(q.denominator)


def gq_to_mpc(z: GaussianRational):
    return mpmath.mpc(q_to_mpf(z.re), q_to_mpf(z.im))


def _numeric_roots(p: Sequence[GaussianRational], bits: int):
    steps = 100
    with mpmath.workprec(bits):
        coeffs = [gq_to_mpc(c) for c in reversed(p)]
        for _ in range(6):
            try:
                return mpmath.polyroots(coeffs, maxsteps=steps, extraprec=bits)
            except mpmath.libmp.NoConvergence:
                steps *= 3
    raise RootIsolationError("numeric root finder did not converge")


def _as_fraction(q: mpq) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


def _try_exact(p: Sequence[GaussianRational], z, max_den: int) -> Optional[GaussianRational]:
    g = mpc_to_gq(z)
    q = GaussianRational(
        _as_fraction(g.re).limit_denominator(max_den),
        _as_fraction(g.im).limit_denominator(max_den),
    )
    if not U.evaluate(p, q):
        return q
    return None


def isolate_roots(p: Sequence, precision: int = 128, max_den: int = 10**4,
                  max_precision: int = 4096) -> List[ComplexDisc]:
    """Isolate all roots of a squarefree polynomial.

    Exact Gaussian-rational roots (denominators up to ``max_den``) are
    detected by exact evaluation and divided out first.
    """
    p = U.monic(U.trim(p))
    if len(p) <= 1:
        return []
    if U.degree(U.gcd(p, U.derivative(p))) > 0:
        raise ValueError("isolate_roots needs a squarefree polynomial")
    exact: List[GaussianRational] = []
    rest = p
    bits = precision
    while True:
        if U.degree(rest) == 0:
            return [ComplexDisc(z, mpq(0), z) for z in exact]
        if U.degree(rest) == 1:
            z = -rest[0] / rest[1]
            return [ComplexDisc(q, mpq(0), q) for q in exact + [z]]
        approx = _numeric_roots(rest, bits)
        found = False
        for z in approx:
            q = _try_exact(rest, z, max_den)
            if q is not None:
                exact.append(q)
                rest, r = U.divmod_poly(rest, [-q, GaussianRational(1)])
                assert not r
                found = True
                break
        if found:
            continue
        discs = _weierstrass_discs(rest, approx)
        if discs is not None:
            return [ComplexDisc(q, mpq(0), q) for q in exact] + discs
        bits *= 2
        if bits > max_precision:
            raise RootIsolationError("could not separate roots at the maximal precision")


def _weierstrass_discs(p: Sequence[GaussianRational], approx) -> Optional[List[ComplexDisc]]:
    n = len(p) - 1
    centers = [mpc_to_gq(z) for z in approx]
    lc = p[-1]
    radii = []
    for k, c in enumerate(centers):
        denom = lc
        for j, d in enumerate(centers):
            if j != k:
                denom = denom * (c - d)
        if not denom:
            return None
        w = U.evaluate(p, c) / denom
        r2 = w.abs_squared() * n * n
        _, r_hi = sqrt_bounds(r2, 200) if r2 else (mpq(0), mpq(0))
        radii.append(_round_up_dyadic(r_hi))
    for k in range(n):
        for j in range(k + 1, n):
            dist2 = (centers[k] - centers[j]).abs_squared()
            if dist2 <= (radii[k] + radii[j]) ** 2:
                return None
    return [ComplexDisc(c, r) for c, r in zip(centers, radii)]


def _round_up_dyadic(q: mpq, bits: int = 256) -> mpq:
    """A dyadic rational >= q with a short denominator (keeps later arithmetic small)."""
    if not q:
        return q
    scale = gmpy2.mpz(1) << bits
    num = -((-q.numerator * scale) // q.denominator)
    return mpq(num, scale)


def refine_position(p: Sequence, disc: ComplexDisc, precision: int) -> ComplexDisc:
    """Recompute the isolating disc for the root in ``disc`` at higher precision."""
    for d in isolate_roots(p, precision=precision):
        if (d.center - disc.center).abs_squared() <= (disc.radius + d.radius) ** 2:
            return d
    raise RootIsolationError("root lost during refinement")


def root_multiplicities(p: Sequence, precision: int = 128):
    """Isolated roots of ``p`` with multiplicities, via Yun's decomposition."""
    out = []
    for k, a in enumerate(U.yun(p), start=1):
        if U.degree(a) <= 0:
            continue
        for d in isolate_roots(a, precision=precision):
            out.append((d, k))
    return out


def disc_contains(disc: ComplexDisc, z) -> bool:
    """Whether the approximate complex value ``z`` lies in the disc (float check)."""
    return abs(complex(z) - complex(disc.center)) <= float(disc.radius) * (1 + 1e-9) + 1e-300


def discs_overlap(a: ComplexDisc, b: ComplexDisc) -> bool:
    return (a.center - b.center).abs_squared() <= (a.radius + b.radius) ** 2

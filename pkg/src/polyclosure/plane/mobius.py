"""The coordinatewise Moebius map mu(z) = i(1-z)/(1+z) applied to plane curves.

mu sends the unit circle to the real projective line and the open disc to the
upper half plane, so a curve touching the torus in infinitely many points
becomes a curve with infinitely many real points.
"""

from __future__ import annotations

from typing import Optional, Tuple

from gmpy2 import mpq

from ..core.gaussian import GaussianRational, I, ONE
from ..core.polynomial import Polynomial


def mobius(z) -> Optional[GaussianRational]:
    """mu(z); None for z = -1 (the point at infinity)."""
    z = GaussianRational.coerce(z)
    if z == -1:
        return None
    return I * (1 - z) / (1 + z)


def inverse_mobius(u) -> GaussianRational:
    """mu^{-1}(u) = (i - u)/(i + u); u real gives a point on the unit circle."""
    u = GaussianRational.coerce(u)
    return (I - u) / (I + u)


def _binomial_powers(n: int, j: int, d: int):
    """(i - T)^a (i + T)^(d - a) for a = 0..d as polynomials in variable j of n."""
    T = Polynomial.variable(n, j)
    minus = Polynomial.constant(n, I) - T
    plus = Polynomial.constant(n, I) + T
    return [minus ** a * plus ** (d - a) for a in range(d + 1)]


def mobius_transform(f: Polynomial) -> Polynomial:
    """G(U, V) = (i+U)^d1 (i+V)^d2 f(mu^{-1}(U), mu^{-1}(V)) with d_j = deg_{X_j} f."""
    if f.n != 2:
        raise ValueError("mobius_transform needs a bivariate polynomial")
    d1, d2 = f.degree_in(1), f.degree_in(2)
    P = _binomial_powers(2, 1, d1)
    Q = _binomial_powers(2, 2, d2)
    out = Polynomial.zero(2)
    for (a, b), c in f.terms.items():
        out = out + (P[a] * Q[b]).scale(c)
    return out


def real_form(G: Polynomial) -> Optional[Polynomial]:
    """A rational polynomial R with G = c*R for a complex scalar c, or None."""
    P, Q = G.real_imag_parts()
    if not Q:
        return P
    if not P:
        return Q
    if set(P.terms) != set(Q.terms):
        return None
    ratio = None
    for m, c in P.terms.items():
        r = Q.terms[m].re / c.re
        if ratio is None:
            ratio = r
        elif r != ratio:
            return None
    return P


def mobius_realness_check(f: Polynomial) -> bool:
    """Whether the Moebius image of V(f) is defined over the reals."""
    if not f:
        raise ValueError("zero polynomial")
    return real_form(mobius_transform(f)) is not None


def rational_coeffs(p: Polynomial, j: int):
    """Ascending mpq coefficients of a real univariate polynomial in X_j."""
    return [c.re for c in p.univariate_coeffs(j)]


def real_fiber(R: Polynomial, u) -> list:
    """Coefficients (in V) of R(u, V) for a rational u."""
    return rational_coeffs(R.substitute(1, GaussianRational(mpq(u))), 2)

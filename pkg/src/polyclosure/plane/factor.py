"""Factorization over Q(i) delegated to sympy (used when the caller supplies none)."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Tuple

from ..core.gaussian import GaussianRational
from ..core.polynomial import Polynomial


def _to_sympy(f: Polynomial, syms):
    import sympy

    expr = 0
    for m, c in f.terms.items():
        coeff = sympy.Rational(int(c.re.numerator), int(c.re.denominator)) + sympy.I * sympy.Rational(
            int(c.im.numerator), int(c.im.denominator))
        term = coeff
        for s, e in zip(syms, m):
            term = term * s ** e
        expr = expr + term
    return expr


def _from_sympy(poly, n: int) -> Polynomial:
    import sympy

    terms = {}
    for m, c in poly.terms():
        c = sympy.sympify(c)
        re, im = sympy.re(c), sympy.im(c)
        terms[tuple(m)] = GaussianRational(Fraction(int(re.p), int(re.q)), Fraction(int(im.p), int(im.q)))
    return Polynomial(n, terms)


def factor_gaussian(f: Polynomial) -> List[Tuple[Polynomial, int]]:
    """Irreducible factors over Q(i) with exponents, constants dropped."""
    import sympy

    syms = sympy.symbols(f"X1:{f.n + 1}")
    _, facs = sympy.factor_list(_to_sympy(f, syms), *syms, gaussian=True)
    out = []
    for p, k in facs:
        P = _from_sympy(sympy.Poly(p, *syms, domain="QQ_I"), f.n)
        if not P.is_constant():
            out.append((P.content_normalized(), int(k)))
    return out

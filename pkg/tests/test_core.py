from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from polyclosure.core.gaussian import GaussianRational
from polyclosure.core.norm import norm_l1, series_norm_partial
from polyclosure.core.polynomial import Polynomial
from polyclosure.core.series import TruncatedSeries, series_invert
from polyclosure.core.textfmt import PolynomialSyntaxError, format_polynomial, parse_polynomial as P

from strategies import gaussians, nonzero_gaussians, points, polynomials, unit_gaussians

G = GaussianRational


def test_gaussian_canonical_form():
    z = G(Fraction(2, 4), Fraction(-6, 8))
    assert z == G(Fraction(1, 2), Fraction(-3, 4))
    assert str(z) == "(1/2-3/4i)"
    assert G(3, 4).abs_squared() == 25


@given(gaussians, gaussians)
def test_abs_squared_multiplicative(z, w):
    assert (z * w).abs_squared() == z.abs_squared() * w.abs_squared()


# -- norm -----------------------------------------------------------------------

@pytest.mark.parametrize("text, value", [
    ("X1+X2-2", 4),
    ("(X1+X2)^2*(X1-X2)", 4),
    ("(3+4i)*X1 + 1", 6),
    ("0", 0),
])
def test_norm_examples(text, value):
    v = norm_l1(P(text, 2))
    assert v.is_exact and v.exact == value
    assert v.lo <= v.exact <= v.hi


def test_norm_inexact_modulus_is_an_interval():
    v = norm_l1(P("(1+i)*X1 + 1"))
    assert not v.is_exact
    assert float(v.lo) <= 1 + 2 ** 0.5 <= float(v.hi)


def test_norm_interval_shrinks_with_precision():
    f = P("(1+i)*X1 + (1+2i)*X2")
    widths = [float(norm_l1(f, p).width) for p in (53, 128, 256)]
    assert widths[0] >= widths[1] >= widths[2]


@given(polynomials(), polynomials())
def test_norm_submultiplicative_and_triangle(f, g):
    nf, ng = norm_l1(f), norm_l1(g)
    assert norm_l1(f * g).possibly_le(nf * ng)
    assert norm_l1(f + g).possibly_le(nf + ng)


@given(polynomials())
def test_norm_zero_iff_zero(f):
    v = norm_l1(f)
    assert (float(v.hi) == 0) == f.is_zero()


# -- evaluation and substitution -----------------------------------------------------

def test_evaluate_examples():
    assert P("X1+X2-2").evaluate([1, 1]) == 0
    assert Polynomial.constant(2, G(2, 3)).evaluate([5, 7]) == G(2, 3)
    z = G(Fraction(3, 5), Fraction(4, 5))
    assert P("X1*X2-1").evaluate([z, z.conjugate()]) == 0
    with pytest.raises(ValueError):
        P("X1*X2").evaluate([1])


@given(polynomials(), polynomials(), points())
def test_evaluation_is_a_ring_homomorphism(f, g, z):
    assert (f * g).evaluate(z) == f.evaluate(z) * g.evaluate(z)
    assert (f + g).evaluate(z) == f.evaluate(z) + g.evaluate(z)


def test_scale_variable_examples():
    w, r = Fraction(1, 2), Fraction(3, 4)
    f = P("1 + 1/2*X + 1/2*Y + X*Y")
    assert f.scale_variable(2, r) == P("1 + 1/2*X + 3/8*Y + 3/4*X*Y")
    assert f.scale_variable(2, 1) == f
    g = P("X1 + 1")
    assert norm_l1(g.scale_variable(1, G(0, 1))).exact == norm_l1(g).exact == 2


@given(polynomials(), polynomials(), unit_gaussians, st.integers(1, 2))
def test_unit_scaling_is_isometric_homomorphism(f, g, c, j):
    assert norm_l1(f.scale_variable(j, c)).exact == norm_l1(f).exact
    assert (f * g).scale_variable(j, c) == f.scale_variable(j, c) * g.scale_variable(j, c)


def test_partial_derivatives():
    f = P("1 + 1/2*X + 1/2*Y + X*Y")
    assert f.partial_derivative(2) == P("1/2 + X", 2)
    assert f.partial_derivative(2, 2).is_zero()
    assert P("X^3").partial_derivative(1) == P("3*X^2")


# -- truncated series --------------------------------------------------------------------

def test_series_invert_geometric():
    s = series_invert(P("1 - X"), 3)
    assert s.to_polynomial() == P("1 + X + X^2 + X^3")
    assert series_norm_partial(s).exact == 4


def test_series_invert_zero_constant_term():
    with pytest.raises((ValueError, ZeroDivisionError)):
        series_invert(P("X1 + X2"), 3)


@given(polynomials(n=2, max_terms=3, max_deg=2).map(lambda f: f + 1).filter(lambda f: bool(f.constant_term())),
       st.integers(0, 6))
def test_series_invert_identity(f, D):
    s = series_invert(f, D)
    assert TruncatedSeries.from_polynomial(f, D) * s == TruncatedSeries.from_polynomial(Polynomial.one(2), D)


def _closed_form_y_coefficients(w, r, D):
    """Independent expansion: coefficient of Y^k of 1/((1+wX) + r(w+X)Y) is
    (-r(w+X))^k / (1+wX)^(k+1), expanded in X by direct series arithmetic."""
    X = P("X", 2)
    out = {}
    inv_a = series_invert(Polynomial.one(2) + X * w, D)  # 1/(1+wX)
    for k in range(D + 1):
        num = TruncatedSeries.from_polynomial(((X + w) * (-r)) ** k, D)
        den = TruncatedSeries.from_polynomial(Polynomial.one(2), D)
        for _ in range(k + 1):
            den = den * inv_a
        term = (num * den).to_polynomial()
        for m, c in term.terms.items():
            if m[0] + k <= D:
                out[(m[0], k)] = c
    return out


def test_series_invert_matches_closed_form_in_y():
    w, r, D = Fraction(1, 2), Fraction(1, 2), 6
    f = P("1 + 1/2*X + 1/2*Y + X*Y").scale_variable(2, r)
    inv = series_invert(f, D)
    expected = _closed_form_y_coefficients(w, r, D)
    assert {m: c for m, c in inv.terms.items()} == {m: c for m, c in expected.items() if c}


def test_series_norm_partial_monotone_in_truncation():
    f = P("1 + 1/2*X + 1/2*Y + X*Y")
    norms = [float(series_norm_partial(series_invert(f, D)).lo) for D in range(0, 10, 2)]
    assert norms == sorted(norms)
    assert series_norm_partial(TruncatedSeries(2, 5)).exact == 0


# -- text format ---------------------------------------------------------------------------

def test_parse_examples():
    assert P("X1+X2-2") == Polynomial(2, {(1, 0): 1, (0, 1): 1, (0, 0): -2})
    f = P("(3/5+4/5i)*X1")
    assert format_polynomial(f) == "(3/5+4/5i)*X1"
    with pytest.raises(PolynomialSyntaxError) as e:
        P("X1^-1")
    assert e.value.position == 3


@given(polynomials(n=3))
def test_print_parse_round_trip(f):
    assert P(format_polynomial(f), 3) == f

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from polyclosure.core.gaussian import GaussianRational
from polyclosure.core.polynomial import Polynomial
from polyclosure.core.textfmt import parse_polynomial as P
from polyclosure.disc import closure_of_maximal_power, i_tilde_finite, maximal_ideal
from polyclosure.ideals import Ideal, ideal_product, radical_contains
from polyclosure.plane import (CurveInputError, FactorizationError, SeriesPreconditionError,
                               UndeterminedCurveError, approx_identity_rates, check_coefficient_bound,
                               classify_curve, closure_plane, closure_plane_report, closure_principal_power,
                               coefficient_bound, conjecture_probe_n3, fit_loglog, g_series_table,
                               inverse_mobius, local_intersection, local_table_prediction, mass_concentration,
                               mobius, mobius_realness_check, mobius_transform, norm_exponent_g1k)
from polyclosure.plane.gseries import boundary_samples, g_values_at
from polyclosure.plane.rates import closed_form_d2_one, quotient_row_norms

G = GaussianRational
EX82 = "1 + 1/2*X + 1/2*Y + X*Y"


def f2(text):
    return P(text, 2)


def ideal(*texts):
    return Ideal(2, [f2(t) for t in texts])


# -- Moebius ---------------------------------------------------------------------------

def test_mobius_round_trip_on_circle():
    z = G(Fraction(3, 5), Fraction(4, 5))
    u = mobius(z)
    assert u.is_real() and inverse_mobius(u) == z
    assert mobius(-1) is None


@pytest.mark.parametrize("text, real", [("X1*X2 - 1", True), (EX82, True), ("X1 - 1/2", False)])
def test_mobius_realness(text, real):
    assert mobius_realness_check(f2(text)) is real


def test_mobius_images_of_examples():
    # X1 X2 - 1 goes to a multiple of U + V, the hyperbola family to a multiple of UV - 3
    G1 = mobius_transform(f2("X1*X2 - 1"))
    assert G1 * G(0, Fraction(1, 2)) == f2("X1 + X2")
    G2 = mobius_transform(f2(EX82))
    ratio = G2.coefficient((1, 1))
    assert G2 * ratio.inverse() == f2("X1*X2 - 3")


# -- classification ------------------------------------------------------------------------

@pytest.mark.parametrize("text, tag", [
    ("X1 - 1/2", "A"), ("X1 - 1", "B"), ("X2 + 1", "C"), ("X1*X2 - 1", "D"), ("X1 + X2 - 2", "E"),
    (EX82, "D"), ("X1^2*X2 - 1", "D"), ("X1 + X2 - 1", "A"), ("X1 - X2", "A"), ("X1*X2 - 2", "E"),
])
def test_classification_examples(text, tag):
    assert classify_curve(f2(text)).tag == tag


def test_classification_witnesses():
    a = classify_curve(f2("X1 - 1/2"))
    z = [G.coerce(c) for c in a.witness["point"]]
    assert a.witness["exact"] and f2("X1 - 1/2").evaluate(z) == 0 and all(c.abs_squared() < 1 for c in z)
    b = classify_curve(f2("X1 - 1"))
    assert b.z == G(1) and b.u == G(1)
    e = classify_curve(f2("X1 + X2 - 2"))
    assert e.M_points() == [(G(1), G(1))]
    assert classify_curve(f2("X1^2 + X2^2 - 2")).M_exact and len(classify_curve(f2("X1^2 + X2^2 - 2")).M) == 4


def test_classification_rejects_non_squarefree():
    with pytest.raises(CurveInputError):
        classify_curve(f2("(X1*X2 - 1)^2"))


_SWAP = {"B": "C", "C": "B"}


@pytest.mark.parametrize("text", ["X1 - 1", "X2 + 1", "X1 - 1/2", "X1^2*X2 - 1", "X1 + X2 - 2", "X1 + 2*X2 - 3"])
def test_classification_swap_symmetry(text):
    f = f2(text)
    a, b = classify_curve(f).tag, classify_curve(f.swap_variables(1, 2)).tag
    assert b == _SWAP.get(a, a)


# -- principal powers and the plane algorithm -------------------------------------------------------

@pytest.mark.parametrize("text, k, expected", [
    ("X1 - 1", 3, "X1 - 1"), ("X1*X2 - 1", 2, "X1*X2 - 1"), ("X1", 2, "X1^2"), (EX82, 3, EX82),
])
def test_closure_principal_power_examples(text, k, expected):
    p = f2(text)
    out = closure_principal_power(p ** k, [(p, k)])
    assert out == Ideal(2, [f2(expected)])
    assert out.contains(p ** k)
    # fixed point
    g = out.basis[0]
    exps = {"X1 - 1": 1, "X1*X2 - 1": 1, "X1^2": 2, EX82: 1}
    kk = exps[expected]
    assert closure_principal_power(g, [(p, kk)]) == out


def test_closure_principal_power_rejects_class_e_and_bad_factorizations():
    with pytest.raises((UndeterminedCurveError, FactorizationError, ValueError)):
        closure_principal_power(f2("X1 + X2 - 2"), [(f2("X1 + X2 - 2"), 1)])
    with pytest.raises(FactorizationError):
        closure_principal_power(f2("X1^2"), [(f2("X1"), 1)])


def test_closure_plane_examples():
    assert closure_plane(ideal("X1 + X2 - 2"), [(f2("X1 + X2 - 2"), 1)]) == ideal("X1 - 1", "X2 - 1")
    f = f2(EX82)
    assert closure_plane(Ideal(2, [f ** 3]), [(f, 3)]) == Ideal(2, [f])
    I = ideal_product(ideal("X1 - 1"), maximal_ideal([1, 1]))
    assert closure_plane(I, [(f2("X1 - 1"), 1)]) == ideal("X1 - 1")


def test_closure_plane_reports_rules():
    rep = closure_plane_report(ideal("X1 + X2 - 2"), [(f2("X1 + X2 - 2"), 1)])
    assert any("class E" in r for r in rep.rules)


_ZERO_DIM = [("X1^2", "X2^2"), ("X1 - 1", "X2^2"), ("X1 + X2 - 2", "(X1 - 1)^2"), ("X1^2 - 1", "X2"),
             ("X1 - 2", "X2"), ("(X1 - 1/2)^2", "X2 - 1"), ("X1*X2", "X1 + X2 - 1")]


@pytest.mark.parametrize("gens", _ZERO_DIM)
def test_closure_plane_agrees_with_i_tilde_on_zero_dimensional_ideals(gens):
    I = ideal(*gens)
    out = closure_plane(I)
    assert out == i_tilde_finite(I)
    assert out.contains_ideal(I)


@pytest.mark.parametrize("gens, factors, points", [
    (("X1 + X2 - 2",), [("X1 + X2 - 2", 1)], [(1, 1)]),
    (("(X1*X2 - 1)^2",), [("X1*X2 - 1", 2)], [(1, 1), (-1, -1), (G(0, 1), G(0, -1))]),
    (("(X1 - 1)*(X1 - 1)", "(X1 - 1)*X2"), [("X1 - 1", 1)], [(1, 0), (1, Fraction(1, 2))]),
])
def test_radical_of_closure_matches_vanishing_on_sampled_support(gens, factors, points):
    I = ideal(*gens)
    out = closure_plane(I, [(f2(t), k) for t, k in factors])
    for z in points:
        assert all(g.evaluate(z) == 0 for g in I.basis)
        for g in out.basis:
            assert g.evaluate(z) == 0


# the four rows of the local table at a point z with a closed m_z-primary J
_TABLE_ROWS = [
    ("boundary x interior, f in (X1 - z1)", "X1 - 1", [1, 0], None, True),
    ("interior x boundary, f in (X2 - z2)", "X2 + 1", [0, -1], None, True),
    ("torus point, f in m_z", "X1 + X2 - 2", [1, 1], None, True),
    ("otherwise: f J", "X1 - 1/2", [1, 0], 2, False),
    ("otherwise: interior point", "X1", [0, 0], 2, False),
]


@pytest.mark.parametrize("label, ftext, z, r, gives_f", _TABLE_ROWS, ids=[r[0] for r in _TABLE_ROWS])
def test_local_table_rows(label, ftext, z, r, gives_f):
    f = f2(ftext)
    J = closure_of_maximal_power(z, r or 1)
    computed, _ = local_intersection(f, J, z)
    assert computed == local_table_prediction(f, J, z)
    assert (computed == Ideal(2, [f])) == gives_f


# -- g series -----------------------------------------------------------------------------------

def test_series_reconstruction_identity():
    for text in (EX82, "X1*X2 - 1", "X1*X2^2 - 1"):
        f = f2(text)
        fam = g_series_table(f, 2, 12, x_degree=8)
        for l in range(3):
            assert fam.reconstruction_holds(l)


def test_rows_vanish_past_the_y_degree():
    fam = g_series_table(f2(EX82), 3, 6, x_degree=5)
    assert all(not any(fam.table[(l, k)]) for l in (2, 3) for k in range(7))


def test_g1k_matches_closed_form():
    w = Fraction(1, 2)
    fam = g_series_table(f2(EX82), 1, 6, x_degree=10)
    from polyclosure.core.series import TruncatedSeries, series_invert
    X = P("X", 2)
    ratio = TruncatedSeries.from_polynomial(X + w, 10) * series_invert(Polynomial.one(2) + X * w, 10)
    for k in range(7):
        p = TruncatedSeries.from_polynomial(Polynomial.one(2), 10)
        for _ in range(k + 1):
            p = p * ratio
        expected = p.to_polynomial() * (-1) ** k
        got = fam.g(1, k)
        assert got == expected


def test_series_precondition():
    with pytest.raises(SeriesPreconditionError):
        g_series_table(f2("X1 - 1/2 + X2"), 1, 3)


def test_coefficient_bound_holds_for_case_d_families():
    for text in ("X1*X2 - 1", EX82):
        chk = check_coefficient_bound(f2(text), k_max=20, samples=boundary_samples(16))
        assert chk.ok and chk.checked > 0


def test_coefficient_bound_needs_the_factorial():
    f = f2("X1*X2^2 - 1")
    vals = g_values_at(f, 1, 2, 0)
    assert vals[(2, 0)].abs_squared() == 4 and coefficient_bound(2, 2, 0, with_factorial=False) == 1
    assert not check_coefficient_bound(f, k_max=5, samples=[G(1)], with_factorial=False).ok
    assert check_coefficient_bound(f, k_max=5, samples=[G(1)]).ok


# -- rates ------------------------------------------------------------------------------------------

def test_fit_loglog_recovers_power_law():
    x = [2.0 ** -k for k in range(3, 10)]
    fit = fit_loglog("power", x, [3 * t ** 0.5 for t in x], expected=0.5)
    assert abs(fit.slope - 0.5) < 1e-12 and fit.in_band and fit.residual < 1e-12
    with pytest.raises(ValueError):
        fit_loglog("one point", [0.5], [1.0])


def test_rate_schedule_validation():
    with pytest.raises(ValueError):
        approx_identity_rates(f2(EX82), [0.5])
    with pytest.raises(ValueError):
        approx_identity_rates(f2(EX82), [0.75, 0.5])


def test_row_engine_matches_closed_form():
    f = f2(EX82)
    for r in (0.5, 0.875):
        A = quotient_row_norms(f, f, r, rel_tol=1e-10)
        B = quotient_row_norms(f * f, f, r, subtract=f, rel_tol=1e-10)
        qa, qb = closed_form_d2_one(0.5, r)
        assert A.estimate == pytest.approx(qa, rel=1e-6)
        assert B.estimate == pytest.approx(qb, rel=1e-6)


def test_trivial_rates_at_r_equal_one_limit():
    # for r close to 1, f/f_r is close to 1 coefficientwise: the quotient norm is >= 1
    A = quotient_row_norms(f2(EX82), f2(EX82), 0.999)
    assert A.estimate >= 1.0


def test_g1k_exponent_short_run():
    fit = norm_exponent_g1k(f2(EX82), k_max=60)
    assert 0.3 < fit.slope < 0.7


def test_mass_concentration():
    assert mass_concentration(0.5, 100) >= 0.95


def test_probe_endpoint_is_zero():
    out = conjecture_probe_n3(0.5, [0.5, 0.75, 1.0], truncation=10)
    assert out["samples"][-1]["value"] == 0.0
    assert out["verdict"] in ("decay", "no decay")
    with pytest.raises(ValueError):
        conjecture_probe_n3(1.5, [0.5, 0.75])

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from polyclosure.core.gaussian import GaussianRational
from polyclosure.core.textfmt import parse_polynomial as P
from polyclosure.disc import (Aggregate, NotPrimaryError, Position, check_primary, classify_point,
                              closure_of_maximal_power, closure_primary, closure_primary_report, i_tilde_finite,
                              maximal_ideal, position_of)
from polyclosure.ideals import Ideal, ideal_product, radical_contains
from polyclosure.ideals.ideal import ideal_intersect

from strategies import polynomials, rational_points

G = GaussianRational
U = G(Fraction(3, 5), Fraction(4, 5))


def ideal(*texts, n=2):
    return Ideal(n, [P(t, n) for t in texts])


def power(I, k):
    out = I
    for _ in range(k - 1):
        out = ideal_product(out, I)
    return out


def test_positions():
    assert position_of(U) is Position.BOUNDARY
    p = classify_point([Fraction(1, 2), 2])
    assert p.coords == (Position.INTERIOR, Position.EXTERIOR) and p.aggregate is Aggregate.OUTSIDE_POLYDISC
    p = classify_point([1, 1])
    assert p.coords == (Position.BOUNDARY, Position.BOUNDARY) and p.aggregate is Aggregate.IN_POLYDISC


def test_maximal_ideal_examples():
    assert maximal_ideal([0, 0]) == ideal("X1", "X2")
    assert maximal_ideal([1, 1]).basis_strings() == ["X1 - 1", "X2 - 1"]


@given(polynomials(), rational_points())
def test_maximal_ideal_membership_is_evaluation(f, z):
    assert maximal_ideal(z).contains(f) == (f.evaluate(z) == 0)


# -- primary closures: the three rows -----------------------------------------------------

def test_primary_closure_boundary_point():
    z = [1, 1]
    assert closure_primary(power(maximal_ideal(z), 2), z) == maximal_ideal(z)


def test_primary_closure_interior_point():
    z = [0, 0]
    m3 = power(maximal_ideal(z), 3)
    assert closure_primary(m3, z) == m3


def test_primary_closure_exterior_point():
    z = [2, 0]
    assert closure_primary(power(maximal_ideal(z), 2), z).is_unit()


def test_primary_closure_mixed_point_adjoins_one_form():
    z = [U, Fraction(1, 3)]
    I = power(maximal_ideal(z), 2)
    rep = closure_primary_report(I, z)
    assert rep.result == ideal_product(maximal_ideal(z), maximal_ideal(z)) + Ideal(2, [P("X1", 2) - U])
    assert "primary-boundary" in rep.rules[0]


def test_primariness_is_checked():
    with pytest.raises(NotPrimaryError):
        check_primary(ideal("X1*(X1-1)", "X2"), [0, 0])
    with pytest.raises(NotPrimaryError):
        closure_primary(ideal("X1", "X2"), [1, 0])


# -- the finite-support closure -----------------------------------------------------------------

def test_i_tilde_examples():
    assert i_tilde_finite(ideal("X1+X2-2", "(X1-1)^2")) == ideal("X1-1", "X2-1")
    m2 = power(maximal_ideal([0, 0]), 2)
    assert i_tilde_finite(m2) == m2
    assert i_tilde_finite(ideal("X1-2", "X2")).is_unit()


def test_i_tilde_with_explicit_support():
    # not zero-dimensional over C but M(I) is finite: supply it
    I = ideal("X1+X2-2", "X1*X2-1")
    assert i_tilde_finite(I, support=[[1, 1]]) == ideal("X1-1", "X2-1")


# randomized corpus: products of powers of maximal ideals at small rational points
_points = st.sampled_from([(0, 0), (1, 0), (0, -1), (Fraction(1, 2), 1), (2, 0), (1, 1), (-1, Fraction(1, 3)),
                           (U, 0)])
corpus = st.lists(st.tuples(_points, st.integers(1, 2)), min_size=1, max_size=2, unique_by=lambda t: t[0]).map(
    lambda support: _build(support))


def _build(support):
    I = None
    for z, k in support:
        J = power(maximal_ideal(z), k)
        I = J if I is None else ideal_intersect(I, J)
    return I


@given(corpus)
def test_i_tilde_contains_and_vanishes_on_support(I):
    T = i_tilde_finite(I)
    assert T.contains_ideal(I)
    from polyclosure.disc import support_in_polydisc
    for z, _, _ in support_in_polydisc(I):
        assert all(g.evaluate(z) == 0 for g in T.basis)


@given(corpus)
def test_i_tilde_idempotent(I):
    T = i_tilde_finite(I)
    assert T.is_unit() or i_tilde_finite(T) == T


@given(corpus, polynomials(n=2, max_terms=2, max_deg=1))
def test_i_tilde_monotone(I, extra):
    J = I + Ideal(2, [extra])
    if J.is_unit():
        return
    assert i_tilde_finite(J).contains_ideal(i_tilde_finite(I))


@given(corpus, corpus)
def test_i_tilde_product_containment(I, J):
    lhs = ideal_product(i_tilde_finite(I), i_tilde_finite(J))
    assert i_tilde_finite(ideal_product(I, J)).contains_ideal(lhs)


@given(corpus, st.sampled_from(["X1", "X2", "X1-1", "X2-1", "X1*X2", "X1+X2-2", "X1-X2"]))
def test_radical_of_i_tilde_is_vanishing_ideal_on_support(I, gtext):
    from polyclosure.disc import support_in_polydisc
    g = P(gtext, 2)
    T = i_tilde_finite(I)
    vanishes = all(g.evaluate(z) == 0 for z, _, _ in support_in_polydisc(I))
    assert radical_contains(T, g) == vanishes


def test_closure_of_maximal_power():
    assert closure_of_maximal_power([1, 0], 2) == ideal("X1-1", "X2^2")

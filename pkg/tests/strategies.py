"""Hypothesis strategies for Gaussian rationals, polynomials and small ideals."""

from fractions import Fraction

from hypothesis import strategies as st

from polyclosure.core.gaussian import GaussianRational
from polyclosure.core.polynomial import Polynomial

small_rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
gaussians = st.builds(GaussianRational, small_rationals, small_rationals)
nonzero_gaussians = gaussians.filter(bool)

# points on the unit circle with rational coordinates, from Pythagorean triples
_TRIPLES = [(1, 0, 1), (0, 1, 1), (3, 4, 5), (4, 3, 5), (5, 12, 13), (12, 5, 13), (8, 15, 17)]
unit_gaussians = st.builds(
    lambda t, sa, sb: GaussianRational(Fraction(sa * t[0], t[2]), Fraction(sb * t[1], t[2])),
    st.sampled_from(_TRIPLES), st.sampled_from([1, -1]), st.sampled_from([1, -1]))


def polynomials(n=2, max_terms=4, max_deg=3, coeffs=gaussians):
    mono = st.tuples(*[st.integers(0, max_deg) for _ in range(n)])
    return st.dictionaries(mono, coeffs, max_size=max_terms).map(lambda d: Polynomial(n, d))


def points(n=2):
    return st.lists(gaussians, min_size=n, max_size=n)


def rational_points(n=2, den=4, lim=6):
    q = st.builds(Fraction, st.integers(-lim, lim), st.integers(1, den))
    return st.lists(q.map(GaussianRational), min_size=n, max_size=n)

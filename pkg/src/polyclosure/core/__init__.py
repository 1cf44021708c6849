from .gaussian import (
    GaussianRational,
    I,
    ONE,
    ZERO,
    format_gaussian,
    gq,
    limit_denominator,
    unit_circle_point,
)
from .norm import NormValue, norm_l1, series_norm_partial
from .polynomial import (
    Monomial,
    Polynomial,
    evaluate,
    linear_form,
    partial_derivative,
    scale_variable,
    variables,
)
from .series import TruncatedSeries, series_invert
from .textfmt import PolynomialSyntaxError, format_polynomial, parse_polynomial, parse_polynomials

__all__ = [
    "GaussianRational",
    "I",
    "ONE",
    "ZERO",
    "format_gaussian",
    "gq",
    "limit_denominator",
    "unit_circle_point",
    "NormValue",
    "norm_l1",
    "series_norm_partial",
    "Monomial",
    "Polynomial",
    "evaluate",
    "linear_form",
    "partial_derivative",
    "scale_variable",
    "variables",
    "TruncatedSeries",
    "series_invert",
    "PolynomialSyntaxError",
    "format_polynomial",
    "parse_polynomial",
    "parse_polynomials",
]

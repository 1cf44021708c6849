"""Plane curves: classification, closures in two variables, and the series/rate lab."""

from .classify import CurveClass, CurveInputError, classify_curve
from .closure import (FactorizationError, UndeterminedCurveError, closure_plane, closure_plane_report,
                      closure_principal_power, local_intersection, local_table_prediction)
from .gseries import (SeriesFamily, SeriesPreconditionError, boundary_samples, check_coefficient_bound,
                      coefficient_bound, g_series_table, g_values_at)
from .mobius import inverse_mobius, mobius, mobius_realness_check, mobius_transform
from .rates import (RateFit, TruncationBudgetError, approx_identity_rates, conjecture_probe_n3,
                    fit_loglog, mass_concentration, norm_exponent_g1k)

from .ideal import (
    Ideal,
    NotZeroDimensionalError,
    contains,
    divides,
    eliminate,
    exact_quotient,
    groebner_basis,
    ideal_colon,
    ideal_colon_principal,
    ideal_intersect,
    ideal_product,
    ideal_sum,
    is_zero_dimensional,
    radical_contains,
)
from .orders import GREVLEX, LEX, MonomialOrder, elimination_order
from .roots import ComplexDisc, RootIsolationError, isolate_roots
from .variety import VarietyPoint, primary_component_at, primary_component_with_radius, variety_points

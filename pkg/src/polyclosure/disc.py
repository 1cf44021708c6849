"""Points relative to the closed polydisc, maximal ideals and closures of primary ideals.

The closure here is the topological closure in C[X] for the l1 coefficient
norm.  For an ideal supported at a single point z the closure is (1) when z
lies outside the closed polydisc and otherwise adjoins the linear forms
X_j - z_j of the coordinates on the unit circle.  For a zero-dimensional
ideal the closure is the intersection, over support points z in the polydisc,
of the stabilized chains I + closure(m_z^r).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Sequence, Tuple

from .core.gaussian import GaussianRational
from .core.polynomial import Polynomial
from .ideals.ideal import Ideal, NotZeroDimensionalError, ideal_intersect, ideal_sum, radical_contains
from .ideals.roots import ComplexDisc, RootIsolationError
from .ideals.variety import power_of_maximal, stabilize, variety_points


class Position(str, Enum):
    INTERIOR = "Interior"
    BOUNDARY = "Boundary"
    EXTERIOR = "Exterior"


class Aggregate(str, Enum):
    IN_POLYDISC = "InPolydisc"
    OUTSIDE_POLYDISC = "OutsidePolydisc"


@dataclass(frozen=True)
class DiscPosition:
    coords: Tuple[Position, ...]

    @property
    def aggregate(self) -> Aggregate:
        if any(p is Position.EXTERIOR for p in self.coords):
            return Aggregate.OUTSIDE_POLYDISC
        return Aggregate.IN_POLYDISC

    @property
    def in_polydisc(self) -> bool:
        return self.aggregate is Aggregate.IN_POLYDISC

    def boundary_indices(self) -> List[int]:
        """1-based indices of coordinates on the unit circle."""
        return [j + 1 for j, p in enumerate(self.coords) if p is Position.BOUNDARY]

    def to_json(self) -> dict:
        return {"coordinates": [p.value for p in self.coords], "aggregate": self.aggregate.value}


class BoundaryAmbiguityError(RootIsolationError):
    """An inexact coordinate whose enclosure of |z_j|^2 straddles 1."""


class NotPrimaryError(ValueError):
    pass


def position_of(z) -> Position:
    a = GaussianRational.coerce(z).abs_squared()
    if a < 1:
        return Position.INTERIOR
    if a == 1:
        return Position.BOUNDARY
    return Position.EXTERIOR


def classify_point(z: Sequence) -> DiscPosition:
    return DiscPosition(tuple(position_of(c) for c in z))


def position_of_disc(d: ComplexDisc) -> Optional[Position]:
    """Exact position when decidable from the enclosure, else None."""
    if d.exact is not None:
        return position_of(d.exact)
    lo, hi = d.abs2_bounds()
    if hi < 1:
        return Position.INTERIOR
    if lo > 1:
        return Position.EXTERIOR
    return None


def maximal_ideal(z: Sequence) -> Ideal:
    z = [GaussianRational.coerce(c) for c in z]
    n = len(z)
    return Ideal(n, [Polynomial.variable(n, j + 1) - z[j] for j in range(n)])


def boundary_forms(z: Sequence) -> List[Polynomial]:
    n = len(z)
    pos = classify_point(z)
    return [Polynomial.variable(n, j) - z[j - 1] for j in pos.boundary_indices()]


@dataclass
class ClosureReport:
    """Result of a closure computation plus the rules that produced it."""

    result: Ideal
    rules: List[str] = field(default_factory=list)
    points: List[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"basis": self.result.basis_strings(), "n": self.result.n, "rules": self.rules,
                "points": self.points}


def check_primary(I: Ideal, z: Sequence) -> None:
    z = [GaussianRational.coerce(c) for c in z]
    if len(z) != I.n:
        raise ValueError("point dimension does not match the ideal")
    if I.is_unit():
        raise NotPrimaryError("the unit ideal is not primary")
    for j in range(I.n):
        if not radical_contains(I, Polynomial.variable(I.n, j + 1) - z[j]):
            raise NotPrimaryError(f"ideal is not primary at the given point (X{j + 1} - z{j + 1} not in its radical)")


def closure_primary_report(I: Ideal, z: Sequence) -> ClosureReport:
    z = [GaussianRational.coerce(c) for c in z]
    check_primary(I, z)
    pos = classify_point(z)
    info = {"point": [str(c) for c in z], "position": pos.to_json()}
    if not pos.in_polydisc:
        return ClosureReport(Ideal.unit(I.n), ["primary-exterior: closure is (1)"], [info])
    forms = boundary_forms(z)
    if not forms:
        return ClosureReport(Ideal(I.n, I.basis), ["primary-interior: ideal is already closed"], [info])
    rule = "primary-boundary: adjoin X_j - z_j for j in " + ",".join(map(str, pos.boundary_indices()))
    return ClosureReport(ideal_sum(I, Ideal(I.n, forms)), [rule], [info])


def closure_primary(I: Ideal, z: Sequence) -> Ideal:
    """Closure of an m_z-primary ideal."""
    return closure_primary_report(I, z).result


def closure_of_maximal_power(z: Sequence, r: int) -> Ideal:
    """closure(m_z^r) for z in the polydisc."""
    z = [GaussianRational.coerce(c) for c in z]
    return Ideal(len(z), power_of_maximal(z, r) + boundary_forms(z))


def support_in_polydisc(I: Ideal, precision: int = 128):
    """Exact points of M(I) with their positions; raises on undecidable points."""
    out = []
    for p in variety_points(I, precision=precision):
        positions = [position_of_disc(d) for d in p.coords]
        if Position.EXTERIOR in positions:
            continue
        if None in positions:
            raise BoundaryAmbiguityError(
                "a variety coordinate has |z_j|^2 within its enclosure of 1 and no exact value"
            )
        dp = DiscPosition(tuple(positions))
        if not p.is_exact:
            raise RootIsolationError(
                "M(I) contains a point with non-rational coordinates; closure needs exact support points"
            )
        out.append((p.point, dp, p.multiplicity))
    return out


def point_chain(I: Ideal, z: Sequence) -> Tuple[Ideal, int]:
    """Stabilized I + closure(m_z^r) and its stabilization radius."""
    return stabilize(lambda r: ideal_sum(I, closure_of_maximal_power(z, r)))


def i_tilde_report(I: Ideal, support: Optional[Sequence[Sequence]] = None, precision: int = 128) -> ClosureReport:
    """Intersection over z in M(I) of the stabilized chains I + closure(m_z^r).

    ``support`` can list the points of M(I) explicitly (needed when I is not
    zero-dimensional but M(I) is finite); otherwise it is computed.
    """
    if I.is_unit():
        return ClosureReport(Ideal.unit(I.n), ["unit ideal"], [])
    if support is None:
        if not I.is_zero_dimensional():
            raise NotZeroDimensionalError("pass the finite support M(I) explicitly for this ideal")
        pts = [(z, dp) for z, dp, _ in support_in_polydisc(I, precision)]
    else:
        pts = []
        for z in support:
            z = tuple(GaussianRational.coerce(c) for c in z)
            if any(g.evaluate(z) for g in I.basis):
                raise ValueError("supplied support point is not a zero of the ideal")
            dp = classify_point(z)
            if dp.in_polydisc:
                pts.append((z, dp))
    if not pts:
        return ClosureReport(Ideal.unit(I.n), ["M(I) is empty: result (1)"], [])
    result = None
    info = []
    for z, dp in pts:
        comp, r = point_chain(I, z)
        info.append({"point": [str(c) for c in z], "position": dp.to_json(), "radius": r,
                     "component": comp.basis_strings()})
        result = comp if result is None else ideal_intersect(result, comp)
    return ClosureReport(Ideal(I.n, result.basis), ["intersection of stabilized point chains"], info)


def i_tilde_finite(I: Ideal, support: Optional[Sequence[Sequence]] = None, precision: int = 128) -> Ideal:
    return i_tilde_report(I, support, precision).result

"""Closures of ideals in C[X1, X2].

Write I = f*J with f the gcd of the generators (supplied factored) and J of
finite codimension.  Principal powers close up factorwise: f_i^k stays for
curves meeting the open bidisc and drops to f_i otherwise.  A factor h whose
curve meets the bidisc only in finitely many torus points contributes its
vanishing ideal I(M(h)) to the finite-codimension part.  The remaining local
analysis at each support point of J follows the four-row table for
(f) ∩ ∩_r (fJ + closure(m_z^r)).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..core.gaussian import GaussianRational
from ..core.polynomial import Polynomial
from ..disc import (BoundaryAmbiguityError, ClosureReport, Position, classify_point,
                    closure_of_maximal_power, closure_primary, maximal_ideal, position_of_disc)
from ..ideals.ideal import Ideal, exact_quotient, ideal_intersect, ideal_product, ideal_sum
from ..ideals.roots import RootIsolationError
from ..ideals.variety import primary_component_at, stabilize, variety_points
from .classify import CurveClass, classify_curve

Factor = Tuple[Polynomial, int]


class UndeterminedCurveError(RuntimeError):
    """A factor could not be classified; the closure is not computed."""

    def __init__(self, message: str, curve: Optional[CurveClass] = None):
        super().__init__(message)
        self.curve = curve


class FactorizationError(ValueError):
    pass


def _resolve_classes(factors: Sequence[Factor], hints, samples: int) -> List[CurveClass]:
    out = []
    for idx, (p, _) in enumerate(factors):
        hint = None
        if hints is not None:
            hint = hints[idx] if isinstance(hints, (list, tuple)) else hints.get(idx)
        if isinstance(hint, CurveClass):
            out.append(hint)
        elif hint is not None and hint != "E":
            out.append(CurveClass(str(hint), {"hint": True}, evidence=["caller-supplied class"]))
        else:
            # E needs the torus point list, so it is always recomputed
            c = classify_curve(p, samples=samples)
            if hint == "E" and c.tag != "E":
                raise FactorizationError(f"hint E for {p} contradicts computed class {c.tag}")
            out.append(c)
    return out


def reduced_exponent(tag: str, k: int) -> int:
    """k' = k for curves meeting the open bidisc, 1 for boundary and torus curves."""
    if tag == "A":
        return k
    if tag in ("B", "C", "D"):
        return 1
    raise UndeterminedCurveError(f"no principal-power closure rule for class {tag}")


def _product(n: int, factors: Sequence[Factor]) -> Polynomial:
    out = Polynomial.one(n)
    for p, k in factors:
        out = out * p ** k
    return out


def _check_factors(factors: Sequence[Factor]):
    normed = []
    for p, k in factors:
        if p.n != 2:
            raise FactorizationError("factors must be bivariate")
        if p.is_constant():
            raise FactorizationError("constant factor in the factorization")
        if k < 1:
            raise FactorizationError("exponents must be positive")
        q = p.content_normalized()
        if q in normed:
            raise FactorizationError("factors must be mutually non-associate")
        normed.append(q)


def closure_principal_power(f: Optional[Polynomial], factored: Sequence[Factor], class_hints=None,
                            samples: int = 32) -> Ideal:
    """Closure of (f) for f = unit * prod f_i^k_i with no factor of class E."""
    return closure_principal_power_report(f, factored, class_hints, samples).result


def closure_principal_power_report(f, factored, class_hints=None, samples: int = 32) -> ClosureReport:
    factored = [(p, int(k)) for p, k in factored]
    _check_factors(factored)
    prod = _product(2, factored)
    if f is not None and f.content_normalized() != prod.content_normalized():
        raise FactorizationError("supplied factorization does not multiply to f")
    classes = _resolve_classes(factored, class_hints, samples)
    g = Polynomial.one(2)
    rules = []
    for (p, k), c in zip(factored, classes):
        if c.tag == "E":
            raise UndeterminedCurveError(f"factor {p} has class E; use closure_plane", c)
        if c.tag == "Undetermined":
            raise UndeterminedCurveError(f"factor {p} could not be classified", c)
        kk = reduced_exponent(c.tag, k)
        g = g * p ** kk
        rules.append(f"factor {p}: class {c.tag}, exponent {k} -> {kk}")
    return ClosureReport(Ideal(2, [g]), rules, [{"factor": str(p), "class": c.to_json()}
                                                  for (p, _), c in zip(factored, classes)])


def vanishing_ideal_of_points(points: Sequence[Sequence[GaussianRational]], n: int = 2) -> Ideal:
    """Intersection of the maximal ideals of exact points; (1) for no points."""
    out = Ideal.unit(n)
    for z in points:
        out = ideal_intersect(out, maximal_ideal(z))
    return out


def local_table_contribution(g: Polynomial, z: Sequence[GaussianRational]) -> bool:
    """Whether the local table gives (g) at z (rather than g*J)."""
    pos = classify_point(z).coords
    B, O = Position.BOUNDARY, Position.INTERIOR
    x1 = Polynomial.variable(2, 1) - z[0]
    x2 = Polynomial.variable(2, 2) - z[1]
    if pos == (B, O):
        return Ideal(2, [x1]).contains(g)
    if pos == (O, B):
        return Ideal(2, [x2]).contains(g)
    if pos == (B, B):
        return maximal_ideal(z).contains(g)
    return False


def local_intersection(f: Polynomial, J: Ideal, z: Sequence) -> Tuple[Ideal, int]:
    """(f) ∩ ∩_r (fJ + closure(m_z^r)), stabilized in r."""
    z = [GaussianRational.coerce(c) for c in z]
    fJ = ideal_product(Ideal(2, [f]), J)
    F = Ideal(2, [f])
    return stabilize(lambda r: ideal_intersect(F, ideal_sum(fJ, closure_of_maximal_power(z, r))))


def local_table_prediction(f: Polynomial, J: Ideal, z: Sequence) -> Ideal:
    z = [GaussianRational.coerce(c) for c in z]
    if local_table_contribution(f, z):
        return Ideal(2, [f])
    return ideal_product(Ideal(2, [f]), J)


def _support_points(J: Ideal, precision: int):
    pts = []
    for vp in variety_points(J, precision=precision):
        positions = [position_of_disc(d) for d in vp.coords]
        if Position.EXTERIOR in positions:
            pts.append((None, vp))
            continue
        if None in positions:
            raise BoundaryAmbiguityError("support point of J with |z_j|^2 undecidable against 1")
        if not vp.is_exact:
            raise RootIsolationError("support point of J in the bidisc has non-rational coordinates")
        pts.append((vp.point, vp))
    return pts


def closure_plane_report(I: Ideal, factors: Sequence[Factor] = (), class_hints=None,
                         samples: int = 32, precision: int = 128) -> ClosureReport:
    """Closure of an ideal of C[X1, X2] given the factored gcd of its generators."""
    if I.n != 2:
        raise ValueError("closure_plane works in two variables")
    if I.is_zero():
        return ClosureReport(Ideal.zero(2), ["zero ideal is closed"], [])
    factors = [(p, int(k)) for p, k in factors]
    if factors:
        _check_factors(factors)
    f = _product(2, factors)
    try:
        J0 = Ideal(2, [exact_quotient(g, f) for g in I.basis])
    except ValueError:
        raise FactorizationError("the supplied principal part does not divide every generator")
    if not J0.is_zero_dimensional():
        raise FactorizationError("the supplied factorization does not capture the gcd of the generators")
    classes = _resolve_classes(factors, class_hints, samples)
    rules = []
    info = []
    g = Polynomial.one(2)
    Jnew = J0
    for (p, k), c in zip(factors, classes):
        info.append({"factor": str(p), "exponent": k, "class": c.to_json()})
        if c.tag == "Undetermined":
            raise UndeterminedCurveError(f"factor {p} could not be classified", c)
        if c.tag == "E":
            try:
                pts = c.M_points()
            except ValueError as exc:
                raise RootIsolationError(f"factor {p}: {exc}")
            Jnew = ideal_product(Jnew, vanishing_ideal_of_points(pts))
            rules.append(f"factor ({p})^{k}: class E, replaced by the vanishing ideal of {len(pts)} torus point(s)")
        else:
            kk = reduced_exponent(c.tag, k)
            g = g * p ** kk
            rules.append(f"factor ({p})^{k}: class {c.tag}, exponent -> {kk}")
    G = Ideal(2, [g])
    if Jnew.is_unit():
        rules.append("finite-codimension part is (1)")
        return ClosureReport(Ideal(2, G.basis), rules, info)
    result = None
    for z, vp in _support_points(Jnew, precision):
        if z is None:
            info.append({"point": vp.to_json(), "position": "OutsidePolydisc"})
            rules.append("support point outside the bidisc dropped")
            continue
        Jv = primary_component_at(Jnew, z)
        dp = classify_point(z)
        entry = {"point": [str(c) for c in z], "position": dp.to_json()}
        if local_table_contribution(g, z):
            contrib = G
            rules.append(f"point {entry['point']}: principal part vanishes along the boundary direction, contributes (g)")
        else:
            closed = closure_primary(Jv, z)
            contrib = ideal_product(G, closed)
            rules.append(f"point {entry['point']}: contributes g*closure(J_v)")
        entry["component"] = Jv.basis_strings()
        info.append(entry)
        result = contrib if result is None else ideal_intersect(result, contrib)
    if result is None:
        result = G
    return ClosureReport(Ideal(2, result.basis), rules, info)


def closure_plane(I: Ideal, factors: Sequence[Factor] = (), class_hints=None,
                  samples: int = 32, precision: int = 128) -> Ideal:
    return closure_plane_report(I, factors, class_hints, samples, precision).result

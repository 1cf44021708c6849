"""Position of an irreducible plane curve V(f) relative to the closed bidisc.

Tags (mutually exclusive for irreducible f):

* ``A``: V(f) meets the open bidisc.
* ``B`` / ``C``: f = u (X1 - z) (resp. u (X2 - z)) with |z| = 1.
* ``D``: V(f) ∩ B^2 is an infinite subset of the torus.
* ``E``: V(f) ∩ B^2 is a finite subset of the torus (possibly empty).

A is established by a certified interior point.  D and E are established by
sampled evidence: exact Sturm counts on fibers of the Moebius-transformed
curve, fiber scans over rational points of the unit circle, and an exact
candidate list for the finite torus locus.  When the evidence is inconsistent
the verdict is ``Undetermined``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from gmpy2 import mpq

from ..core import univariate as U
from ..core.gaussian import GaussianRational, unit_circle_point
from ..core.polynomial import Polynomial
from ..ideals.ideal import Ideal, eliminate, is_squarefree
from ..ideals.roots import ComplexDisc, isolate_roots
from ..ideals.variety import variety_points
from .mobius import inverse_mobius, mobius_transform, real_form
from .sturm import count_real_roots, sturm_sequence

TAGS = ("A", "B", "C", "D", "E", "Undetermined")


class CurveInputError(ValueError):
    """Input is not a squarefree nonconstant bivariate polynomial of the expected shape."""


@dataclass
class CurveClass:
    tag: str
    witness: dict = field(default_factory=dict)
    z: Optional[GaussianRational] = None
    u: Optional[GaussianRational] = None
    M: Optional[list] = None
    evidence: List[str] = field(default_factory=list)

    @property
    def M_exact(self) -> bool:
        return self.M is not None and all(p.get("exact") for p in self.M)

    def M_points(self) -> List[Tuple[GaussianRational, GaussianRational]]:
        if not self.M_exact:
            raise ValueError("finite locus has points with non-rational coordinates")
        return [tuple(p["point"]) for p in self.M]

    def to_json(self) -> dict:
        out = {"tag": self.tag, "witness": _jsonable(self.witness), "evidence": list(self.evidence)}
        if self.z is not None:
            out["z"] = str(self.z)
            out["u"] = str(self.u)
        if self.M is not None:
            out["M"] = [_jsonable(p) for p in self.M]
        return out


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, GaussianRational):
        return str(obj)
    if isinstance(obj, ComplexDisc):
        return obj.to_json()
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    return obj


# -- sampling -----------------------------------------------------------------

_T_VALUES = [mpq(0), mpq(1), mpq(-1), mpq(2), mpq(-2), mpq(1, 2), mpq(-1, 2), mpq(3), mpq(-3),
             mpq(1, 3), mpq(-1, 3), mpq(5), mpq(-5), mpq(1, 5), mpq(3, 2), mpq(-3, 2)]
_RADII = [mpq(0), mpq(1, 4), mpq(1, 2), mpq(3, 4), mpq(7, 8), mpq(15, 16), mpq(63, 64)]


def circle_samples(count: int = 16, seed: int = 0) -> List[GaussianRational]:
    """Exact rational points of the unit circle, including -1."""
    out = [unit_circle_point(t) for t in _T_VALUES[:count]]
    out.append(GaussianRational(-1))
    rng = random.Random(seed)
    for _ in range(max(0, count - len(_T_VALUES))):
        out.append(unit_circle_point(mpq(rng.randint(-400, 400), rng.randint(1, 97))))
    return out


def interior_samples(count: int = 32, seed: int = 0) -> List[GaussianRational]:
    """Gaussian rationals in the open unit disc: radius/angle grid plus seeded extras."""
    out = [GaussianRational(0)]
    for r in _RADII[1:]:
        for t in _T_VALUES[:8]:
            out.append(unit_circle_point(t) * r)
    rng = random.Random(seed)
    while len(out) < len(_RADII[1:]) * 8 + 1 + count:
        a, b = mpq(rng.randint(-63, 63), 64), mpq(rng.randint(-63, 63), 64)
        if a * a + b * b < 1:
            out.append(GaussianRational(a, b))
    return out


def fiber_roots(f: Polynomial, x) -> Optional[List[ComplexDisc]]:
    """Isolated roots of f(x, Y); None when the fiber polynomial vanishes identically."""
    p = U.trim(f.substitute(1, x).univariate_coeffs(2))
    if not p:
        return None
    if len(p) == 1:
        return []
    return isolate_roots(U.squarefree_part(p))


def _strictly_inside(d: ComplexDisc) -> bool:
    return d.abs2_bounds()[1] < 1


def _strictly_outside(d: ComplexDisc) -> bool:
    return d.abs2_bounds()[0] > 1


def _on_circle(d: ComplexDisc) -> bool:
    return d.exact is not None and d.exact.abs_squared() == 1


def _swap_point(p):
    return (p[1], p[0])


def _interior_search(f: Polynomial, xs: Sequence[GaussianRational]):
    for x in xs:
        roots = fiber_roots(f, x)
        if not roots:
            continue
        for d in roots:
            if _strictly_inside(d):
                return x, d
    return None


def _perturb_inward(f: Polynomial, x: GaussianRational, kmax: int = 40):
    """An interior witness near a boundary point x whose fiber reaches into the disc."""
    for k in range(1, kmax + 1):
        xp = x * (1 - mpq(1, 2 ** k))
        roots = fiber_roots(f, xp)
        if roots:
            for d in roots:
                if _strictly_inside(d):
                    return xp, d
    return None


def _boundary_scan(f: Polynomial, xs: Sequence[GaussianRational]):
    """Classify fiber roots over circle points: inside / on circle / outside / ambiguous."""
    inside, torus, ambiguous = [], [], 0
    for x in xs:
        roots = fiber_roots(f, x)
        if roots is None:
            continue
        for d in roots:
            if _strictly_inside(d):
                inside.append((x, d))
            elif _on_circle(d):
                torus.append((x, d.exact))
            elif not _strictly_outside(d):
                ambiguous += 1
    return inside, torus, ambiguous


# -- real roots of rational polynomials -----------------------------------------

def real_roots(p: Sequence) -> Optional[List[ComplexDisc]]:
    """Real roots of a real rational polynomial as isolating discs; None if undecided."""
    p = U.trim(p)
    if len(p) <= 1:
        return []
    sq = U.squarefree_part(p)
    discs = isolate_roots(sq)
    n_real = count_real_roots([c.re for c in sq])
    touching = [d for d in discs if (d.exact is not None and d.exact.im == 0)
                or (d.exact is None and abs(d.center.im) <= d.radius)]
    if len(touching) != n_real:
        return None
    return touching


def _real_point_from_disc(d: ComplexDisc):
    if d.exact is not None:
        return d.exact
    return GaussianRational(d.center.re)


# -- finite torus locus -----------------------------------------------------------

def _circle_points_of_univariate(h: Sequence[GaussianRational]) -> Optional[list]:
    """Roots y of h on the unit circle: exact list entries, or ('approx', disc)."""
    h = U.trim(h)
    if len(h) <= 1:
        return []
    d = len(h) - 1
    T = Polynomial.variable(1, 1)
    iP = Polynomial.constant(1, GaussianRational(0, 1))
    H = Polynomial.zero(1)
    for k, c in enumerate(h):
        H = H + ((iP - T) ** k * (iP + T) ** (d - k)).scale(c)
    P, Q = H.real_imag_parts()
    g = U.gcd(P.univariate_coeffs(1) if P else [], Q.univariate_coeffs(1) if Q else [])
    out = []
    if U.evaluate(h, -1) == 0:
        out.append({"exact": True, "value": GaussianRational(-1)})
    if U.degree(g) <= 0:
        return out
    rr = real_roots(g)
    if rr is None:
        return None
    for disc in rr:
        if disc.exact is not None:
            out.append({"exact": True, "value": inverse_mobius(disc.exact)})
        else:
            out.append({"exact": False, "value": complex(inverse_mobius(disc.center)), "disc": disc})
    return out


def finite_torus_locus(f: Polynomial, G: Polynomial) -> Optional[list]:
    """Points of V(f) on the torus when the Moebius image has finitely many real points."""
    P, Q = G.real_imag_parts()
    pts = []
    J = Ideal(2, [P, Q])
    if not J.is_zero_dimensional():
        return None
    if not J.is_unit():
        elim = []
        for j in (1, 2):
            e = eliminate(J, [2 - j])  # keep variable j
            gen = e.basis[0]
            elim.append(real_roots(gen.univariate_coeffs(j)))
        if any(r is None for r in elim):
            return None
        real_u = {(d.center, d.radius) for d in elim[0]}
        real_v = {(d.center, d.radius) for d in elim[1]}
        for vp in variety_points(J):
            du, dv = vp.coords
            if not _is_real_disc(du, real_u, elim[0]) or not _is_real_disc(dv, real_v, elim[1]):
                continue
            if du.exact is not None and dv.exact is not None:
                z = (inverse_mobius(du.exact), inverse_mobius(dv.exact))
                if f.evaluate(z):
                    return None
                pts.append({"exact": True, "point": z})
            else:
                approx = (complex(inverse_mobius(GaussianRational(du.center.re))),
                          complex(inverse_mobius(GaussianRational(dv.center.re))))
                pts.append({"exact": False, "approx": approx})
    # points with a coordinate at -1 (infinity after the transform)
    for j in (1, 2):
        h = f.substitute(j, -1).univariate_coeffs(3 - j)
        circ = _circle_points_of_univariate(h)
        if circ is None:
            return None
        for c in circ:
            if c["exact"]:
                z = (GaussianRational(-1), c["value"]) if j == 1 else (c["value"], GaussianRational(-1))
                pts.append({"exact": True, "point": z})
            else:
                z = (-1 + 0j, c["value"]) if j == 1 else (c["value"], -1 + 0j)
                pts.append({"exact": False, "approx": z})
    # dedupe exact points
    seen, out = set(), []
    for p in pts:
        key = tuple(p["point"]) if p["exact"] else tuple(p["approx"])
        if key not in seen:
            seen.add(key)
            out.append(p)
    return out


def _is_real_disc(d: ComplexDisc, real_keys, real_list) -> bool:
    if d.exact is not None:
        return d.exact.im == 0
    if abs(d.center.im) > d.radius:
        return False
    # overlaps the real axis: accept only if it meets a certified real root disc
    return any((d.center - r.center).abs_squared() <= (d.radius + r.radius) ** 2 for r in real_list)


# -- classification -------------------------------------------------------------

def _linear_case(f: Polynomial, j: int) -> CurveClass:
    coeffs = f.univariate_coeffs(j) if f.n == 1 else f.drop_variables([j - 1]).univariate_coeffs(1)
    if len(coeffs) != 2:
        raise CurveInputError("polynomial in a single variable of degree > 1 is reducible")
    u = coeffs[1]
    z = -coeffs[0] / u
    a = z.abs_squared()
    if a == 1:
        tag = "B" if j == 1 else "C"
        return CurveClass(tag, {"factorization": f"{u} * (X{j} - ({z}))"}, z=z, u=u,
                          evidence=[f"f = u*(X{j} - z) with |z|^2 = 1"])
    if a < 1:
        pt = (z, GaussianRational(0)) if j == 1 else (GaussianRational(0), z)
        return CurveClass("A", {"point": list(pt), "exact": True},
                          evidence=[f"vertical line X{j} = z with |z|^2 = {a} < 1"])
    return CurveClass("E", {"reason": f"line X{j} = z with |z|^2 > 1"}, M=[],
                      evidence=[f"|z|^2 = {a} > 1, curve misses the bidisc"])


def _a_witness(x, d, swapped: bool) -> CurveClass:
    y = d.exact if d.exact is not None else d
    pt = [x, y]
    if swapped:
        pt = pt[::-1]
    return CurveClass("A", {"point": pt, "exact": d.exact is not None})


def classify_curve(f: Polynomial, samples: int = 32, seed: int = 0) -> CurveClass:
    """Case (A)-(E) of an irreducible bivariate f; irreducibility is the caller's assertion."""
    if f.n != 2:
        raise CurveInputError("classify_curve needs a polynomial in X1, X2")
    if f.is_constant():
        raise CurveInputError("constant polynomial does not define a curve")
    dep1, dep2 = f.depends_on(1), f.depends_on(2)
    if not dep2:
        return _linear_case(f, 1)
    if not dep1:
        return _linear_case(f, 2)
    if not is_squarefree(f):
        raise CurveInputError("polynomial is not squarefree (shares a factor with its partial derivatives)")

    evidence = []
    xs = interior_samples(samples, seed)
    fs = f.swap_variables(1, 2)
    hit = _interior_search(f, xs)
    if hit:
        c = _a_witness(*hit, swapped=False)
        c.evidence.append("interior fiber point over a sampled interior abscissa")
        return c
    hit = _interior_search(fs, xs)
    if hit:
        c = _a_witness(*hit, swapped=True)
        c.evidence.append("interior fiber point over a sampled interior ordinate")
        return c
    evidence.append(f"no interior point over {len(xs)} interior samples in either variable")

    cs = circle_samples(max(16, samples // 2), seed)
    scans = [_boundary_scan(f, cs), _boundary_scan(fs, cs)]
    for swapped, (inside, _, _) in enumerate(scans):
        for x, d in inside:
            hit = _perturb_inward(fs if swapped else f, x)
            if hit:
                c = _a_witness(*hit, swapped=bool(swapped))
                c.evidence = evidence + ["boundary fiber point reaching into the open disc; witness found by inward perturbation"]
                return c
    if scans[0][0] or scans[1][0]:
        evidence.append("a boundary fiber meets the open disc but no interior witness was certified")
        return CurveClass("Undetermined", {}, evidence=evidence)
    ambiguous = scans[0][2] + scans[1][2]
    torus_samples = [(x, y) for x, y in scans[0][1]] + [_swap_point(p) for p in scans[1][1]]

    G = mobius_transform(f)
    R = real_form(G)
    if R is not None:
        evidence.append("Moebius image is defined over the reals")
        return _real_case(f, R, torus_samples, ambiguous, evidence)
    evidence.append("Moebius image is not defined over the reals: torus locus is finite")
    M = finite_torus_locus(f, G)
    if M is None:
        evidence.append("finite torus candidate list could not be certified")
        return CurveClass("Undetermined", {}, evidence=evidence)
    exact_M = {tuple(p["point"]) for p in M if p["exact"]}
    for pt in torus_samples:
        if tuple(pt) not in exact_M:
            evidence.append(f"sampled torus point {pt} missing from candidate list")
            return CurveClass("Undetermined", {}, evidence=evidence)
    if ambiguous:
        evidence.append(f"{ambiguous} sampled boundary-fiber roots could not be placed relative to the circle")
    evidence.append(f"{len(M)} torus point(s); boundary fibers stay outside the open disc on samples")
    return CurveClass("E", {"torus_points": len(M)}, M=M, evidence=evidence)


def _real_case(f, R, torus_samples, ambiguous, evidence) -> CurveClass:
    dV = R.degree_in(2)
    fibers = []
    real_fibers = 0
    for t in _T_VALUES:
        p = [c.re for c in R.substitute(1, GaussianRational(t)).univariate_coeffs(2)]
        while p and not p[-1]:
            p.pop()
        if len(p) - 1 != dV:
            continue
        squarefree = len(sturm_sequence(p)[-1]) == 1
        nreal = count_real_roots(p)
        fibers.append({"u": str(t), "degree": dV, "real_roots": nreal, "squarefree": squarefree})
        if nreal == dV and squarefree:
            real_fibers += 1
        elif nreal < dV:
            x = inverse_mobius(t)
            hit = _perturb_inward(f, x)
            if hit:
                c = _a_witness(*hit, swapped=False)
                c.evidence = evidence + [f"fiber over u={t} has non-real roots; inward perturbation gives an interior point"]
                return c
            evidence.append(f"fiber over u={t} has non-real roots but no interior witness was certified")
            return CurveClass("Undetermined", {"fibers": fibers}, evidence=evidence)
    if real_fibers == 0:
        evidence.append("no sampled fiber had the full count of simple real roots")
        return CurveClass("Undetermined", {"fibers": fibers}, evidence=evidence)
    evidence.append(f"{real_fibers} sampled fibers all-real and squarefree (nonzero discriminant)")
    if ambiguous:
        evidence.append(f"{ambiguous} sampled boundary-fiber roots could not be placed relative to the circle")
    return CurveClass("D", {"fibers": fibers, "torus_points": [list(p) for p in torus_samples[:8]]},
                      evidence=evidence)

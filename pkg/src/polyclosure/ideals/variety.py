"""Zero-dimensional varieties: multiplication matrices, points, primary components."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

import mpmath
from gmpy2 import mpq

from ..core import univariate as U
from ..core.gaussian import GaussianRational, ZERO
from ..core.norm import sqrt_bounds
from ..core.polynomial import Polynomial
from .ideal import Ideal, NotZeroDimensionalError, ideal_sum
from .linalg import charpoly
from .roots import ComplexDisc, RootIsolationError, discs_overlap, gq_to_mpc, isolate_roots, root_multiplicities

STABILIZATION_CAP = 64


@dataclass(frozen=True)
class VarietyPoint:
    coords: Tuple[ComplexDisc, ...]
    multiplicity: int

    @property
    def is_exact(self) -> bool:
        return all(c.is_exact for c in self.coords)

    @property
    def point(self) -> Optional[Tuple[GaussianRational, ...]]:
        if not self.is_exact:
            return None
        return tuple(c.exact for c in self.coords)

    def approx(self) -> Tuple[complex, ...]:
        return tuple(complex(c.center) for c in self.coords)

    def to_json(self) -> dict:
        out = {"exact": self.is_exact, "multiplicity": self.multiplicity}
        if self.is_exact:
            out["coordinates"] = [str(c) for c in self.point]
        else:
            out["coordinates"] = [c.to_json() for c in self.coords]
        return out


def multiplication_matrices(I: Ideal):
    """Standard monomial basis and the matrices of multiplication by each X_j."""
    B = I.standard_monomials()
    index = {m: k for k, m in enumerate(B)}
    N = len(B)
    mats = []
    for j in range(1, I.n + 1):
        M = [[ZERO] * N for _ in range(N)]
        for col, b in enumerate(B):
            shifted = list(b)
            shifted[j - 1] += 1
            nf = I.normal_form(Polynomial(I.n, {tuple(shifted): 1}))
            for m, c in nf.terms.items():
                M[index[m]][col] = c
        mats.append(M)
    return B, mats


def _combine(mats, weights):
    N = len(mats[0])
    out = [[ZERO] * N for _ in range(N)]
    for M, w in zip(mats, weights):
        if not w:
            continue
        for r in range(N):
            row, src = out[r], M[r]
            for c in range(N):
                if src[c]:
                    row[c] = row[c] + w * src[c]
    return out


def _residual_small(g: Polynomial, centers, bits: int) -> bool:
    with mpmath.workprec(bits):
        z = [gq_to_mpc(c) for c in centers]
        val = mpmath.mpc(0)
        scale = mpmath.mpf(0)
        for m, c in g.terms.items():
            t = gq_to_mpc(c)
            for zj, e in zip(z, m):
                if e:
                    t *= zj ** e
            val += t
            scale += abs(t)
        tol = (scale + 1) * mpmath.mpf(2) ** (-(bits // 2))
        return abs(val) <= tol


def variety_points(I: Ideal, precision: int = 128) -> List[VarietyPoint]:
    """All complex zeros of a zero-dimensional ideal with multiplicities."""
    if not I.is_zero_dimensional():
        raise NotZeroDimensionalError("variety_points needs a zero-dimensional ideal")
    if I.is_unit():
        return []
    B, mats = multiplication_matrices(I)
    N = len(B)
    coord_roots = []
    for M in mats:
        chi = charpoly(M)
        coord_roots.append(isolate_roots(U.squarefree_part(chi), precision=precision))
    basis = I.basis
    candidates = []
    for combo in itertools.product(*coord_roots):
        if all(d.is_exact for d in combo):
            z = [d.exact for d in combo]
            if all(not g.evaluate(z) for g in basis):
                candidates.append(combo)
        else:
            centers = [d.center for d in combo]
            if all(_residual_small(g, centers, precision) for g in basis):
                candidates.append(combo)
    # match candidates to roots of the characteristic polynomial of a linear form
    for trial in range(12):
        weights = [GaussianRational(1)] + [GaussianRational((trial + 2) ** (j + 1) + j) for j in range(I.n - 1)]
        lroots = root_multiplicities(charpoly(_combine(mats, weights)), precision=precision)
        if len(lroots) != len(candidates):
            continue
        points = []
        ok = True
        used = set()
        for combo in candidates:
            center = sum((w * d.center for w, d in zip(weights, combo)), ZERO)
            rad = mpq(0)
            for w, d in zip(weights, combo):
                if d.radius:
                    _, wa = sqrt_bounds(w.abs_squared(), 64)
                    rad += wa * d.radius
            probe = ComplexDisc(center, rad)
            hits = [k for k, (ld, _) in enumerate(lroots) if discs_overlap(probe, ld)]
            if len(hits) != 1 or hits[0] in used:
                ok = False
                break
            used.add(hits[0])
            points.append(VarietyPoint(tuple(combo), lroots[hits[0]][1]))
        if ok and sum(p.multiplicity for p in points) == N:
            return points
    raise RootIsolationError("could not certify the point set of the variety")


def power_of_maximal(z: Sequence[GaussianRational], r: int) -> List[Polynomial]:
    """Generators of m_z^r: all products of r shifted linear forms."""
    n = len(z)
    lin = [Polynomial.variable(n, j + 1) - z[j] for j in range(n)]
    gens = []
    for combo in itertools.combinations_with_replacement(range(n), r):
        p = Polynomial.one(n)
        for j in combo:
            p = p * lin[j]
        gens.append(p)
    return gens


def stabilize(make: Callable[[int], Ideal], cap: int = STABILIZATION_CAP) -> Tuple[Ideal, int]:
    """First r with make(r) == make(r+1), confirmed at r+2; raises past ``cap``."""
    prev = make(1)
    r = 1
    while r <= cap:
        nxt = make(r + 1)
        if nxt == prev:
            conf = make(r + 2)
            if conf == prev:
                return prev, r
        prev = nxt
        r += 1
    raise RuntimeError(f"ideal chain did not stabilize for r <= {cap}")


def primary_component_with_radius(I: Ideal, z: Sequence) -> Tuple[Ideal, int]:
    z = [GaussianRational.coerce(c) for c in z]
    if len(z) != I.n:
        raise ValueError("point dimension does not match the ideal")
    if not all(not g.evaluate(z) for g in I.basis):
        raise ValueError("point is not in the variety of the ideal")
    if not I.is_zero_dimensional():
        raise NotZeroDimensionalError("primary_component_at needs a zero-dimensional ideal")
    return stabilize(lambda r: ideal_sum(I, Ideal(I.n, power_of_maximal(z, r))))


def primary_component_at(I: Ideal, z: Sequence) -> Ideal:
    """The m_z-primary component of a zero-dimensional ideal at an exact point."""
    return primary_component_with_radius(I, z)[0]

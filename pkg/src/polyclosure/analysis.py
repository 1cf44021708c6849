"""Desk-scale numerics for the analytic side: the solid Cauchy transform on the
unit disc, the d-bar identity, Lojasiewicz certificates on grids, the
functions phi_{s,t} = g^t / F^s and the first Koszul-type decomposition
g^t = sum_j phi_{1,t} conj(f_j) f_j.

Everything here is grid evidence in floating point, not proof.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from numpy.polynomial.legendre import leggauss

from .core.polynomial import Polynomial
from .ideals.ideal import Ideal, radical_contains

ArrayFunc = Callable[[np.ndarray], np.ndarray]


# -- grids -----------------------------------------------------------------------

@dataclass(frozen=True)
class DiscGrid:
    """Square lattice of spacing 2/resolution clipped to the closed unit disc,
    plus ``resolution`` equally spaced nodes on the unit circle.

    Doubling the resolution keeps every old node.
    """

    resolution: int

    @property
    def spacing(self) -> float:
        return 2.0 / self.resolution

    def lattice(self) -> np.ndarray:
        """(N+1) x (N+1) complex lattice over [-1, 1]^2 (rows: imaginary part)."""
        t = np.linspace(-1.0, 1.0, self.resolution + 1)
        return t[None, :] + 1j * t[:, None]

    def inside_mask(self) -> np.ndarray:
        return np.abs(self.lattice()) <= 1.0

    def boundary_nodes(self) -> np.ndarray:
        k = np.arange(self.resolution)
        return np.exp(2j * np.pi * k / self.resolution)

    def nodes(self) -> np.ndarray:
        lat = self.lattice()
        return np.concatenate([lat[self.inside_mask()], self.boundary_nodes()])

    def refine(self) -> "DiscGrid":
        return DiscGrid(2 * self.resolution)

    def interior_stencil_mask(self) -> np.ndarray:
        """Lattice nodes whose four centered-difference neighbours lie strictly inside the disc."""
        lat = self.lattice()
        h = self.spacing
        ok = np.abs(lat) < 1.0
        for d in (h, -h, 1j * h, -1j * h):
            ok &= np.abs(lat + d) < 1.0
        ok[0, :] = ok[-1, :] = ok[:, 0] = ok[:, -1] = False
        return ok


@dataclass
class GridFunction:
    """Values of a function on a disc grid; keeps the callable when one is known."""

    grid: DiscGrid
    values: np.ndarray
    func: Optional[ArrayFunc] = None

    @classmethod
    def from_function(cls, func: ArrayFunc, resolution: int) -> "GridFunction":
        g = DiscGrid(resolution)
        return cls(g, func(g.nodes()), func)

    def __call__(self, z: np.ndarray) -> np.ndarray:
        if self.func is not None:
            return self.func(z)
        return self._interpolate(z)

    def _interpolate(self, z: np.ndarray) -> np.ndarray:
        """Bilinear interpolation on the lattice; off-disc lattice cells take the nearest grid value."""
        from scipy.interpolate import RegularGridInterpolator
        from scipy.spatial import cKDTree

        lat = self.grid.lattice()
        t = lat[0].real
        nodes = self.grid.nodes()
        tree = cKDTree(np.stack([nodes.real, nodes.imag], axis=-1))
        _, idx = tree.query(np.stack([lat.real.ravel(), lat.imag.ravel()], axis=-1))
        full = self.values[idx].reshape(lat.shape)
        z = np.asarray(z, dtype=complex)
        pts = np.stack([z.imag.ravel(), z.real.ravel()], axis=-1)
        re = RegularGridInterpolator((t, t), full.real)(pts)
        im = RegularGridInterpolator((t, t), full.imag)(pts)
        return (re + 1j * im).reshape(z.shape)


# -- Cauchy transform --------------------------------------------------------------

@dataclass(frozen=True)
class PolarRule:
    """Gauss-Legendre nodes in the radius and on each of four angular arcs.

    The arcs are cut at the directions tangent to the circle |zeta| = |z|,
    where the exit radius has its near-kink when z approaches the boundary.
    """

    n_radial: int = 64
    n_arc: int = 32

    @property
    def n_angular(self) -> int:
        return 4 * self.n_arc

    def tables(self):
        xr, wr = leggauss(self.n_radial)
        xa, wa = leggauss(self.n_arc)
        rho = 0.5 * (xr + 1.0)
        w_rho = 0.5 * wr
        # offsets on [0, 2 pi) made of four quarter arcs
        off = np.concatenate([(np.pi / 4) * (xa + 1.0) + k * np.pi / 2 for k in range(4)])
        w_off = np.tile((np.pi / 4) * wa, 4)
        return rho, w_rho, off, w_off


def _exit_radius(z: np.ndarray, e: np.ndarray) -> np.ndarray:
    """Distance from z along directions e (one row per z) to the unit circle."""
    a = (np.conj(z)[:, None] * e).real
    disc = a * a + np.maximum(0.0, 1.0 - np.abs(z) ** 2)[:, None]
    return -a + np.sqrt(disc)


def cauchy_transform(v, z, rule: PolarRule = PolarRule(), chunk: int = 128) -> np.ndarray:
    """K(v)(z) = (1/2 pi i) int_B v(zeta)/(zeta - z) dzeta ^ dconj(zeta) = -(1/pi) int_B v/(zeta - z) dA.

    Polar coordinates centred at z turn the kernel into e^{-i theta} d rho d theta.
    ``v`` is a vectorized callable (or a GridFunction); ``z`` a point or array of points.
    """
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    if np.any(np.abs(z) > 1.0 + 1e-12):
        raise ValueError("evaluation point outside the closed unit disc")
    rho, w_rho, off, w_off = rule.tables()
    flat = z.ravel()
    res = np.empty(flat.shape, dtype=complex)
    for s in range(0, flat.size, chunk):
        zc = flat[s: s + chunk]
        theta0 = np.angle(zc) + np.pi / 2
        e = np.exp(1j * (theta0[:, None] + off[None, :]))      # (c, na)
        R = _exit_radius(zc, e)
        pts = zc[:, None, None] + (R[:, :, None] * rho[None, None, :]) * e[:, :, None]
        inner = (v(pts) * w_rho[None, None, :]).sum(axis=2) * R     # int_0^R v d rho
        res[s: s + chunk] = -(inner * np.conj(e) * w_off[None, :]).sum(axis=1) / np.pi
    return res.reshape(z.shape)


@dataclass
class DbarReport:
    resolution: int
    max_error: float
    nodes: int
    rule: Tuple[int, int]

    def to_json(self) -> dict:
        return {"resolution": self.resolution, "max_interior_error": self.max_error,
                "interior_nodes": self.nodes, "quadrature": list(self.rule)}


def dbar_check(v: ArrayFunc, resolution: int = 256, rule: PolarRule = PolarRule()) -> DbarReport:
    """max |dbar K(v) - v| over interior lattice nodes, dbar = (d_x + i d_y)/2 by centered differences."""
    grid = DiscGrid(resolution)
    lat = grid.lattice()
    inner = grid.interior_stencil_mask()
    need = inner.copy()
    need[:, 1:] |= inner[:, :-1]
    need[:, :-1] |= inner[:, 1:]
    need[1:, :] |= inner[:-1, :]
    need[:-1, :] |= inner[1:, :]
    K = np.full(lat.shape, np.nan, dtype=complex)
    K[need] = cauchy_transform(v, lat[need], rule)
    h = grid.spacing
    dx = (K[:, 2:] - K[:, :-2]) / (2 * h)
    dy = (K[2:, :] - K[:-2, :]) / (2 * h)
    dbar = 0.5 * (dx[1:-1, :] + 1j * dy[:, 1:-1])
    mask = inner[1:-1, 1:-1]
    err = np.abs(dbar[mask] - v(lat[1:-1, 1:-1][mask]))
    return DbarReport(resolution, float(err.max()), int(mask.sum()), (rule.n_radial, rule.n_angular))


def bump(center: complex = 0.2 + 0.1j, width: float = 0.3) -> ArrayFunc:
    return lambda z: np.exp(-np.abs(z - center) ** 2 / width ** 2)


STANDARD_TEST_FUNCTIONS = {
    "re": lambda z: z.real + 0j,
    "abs2": lambda z: np.abs(z) ** 2 + 0j,
    "bump": bump(),
}


# -- polynomial evaluation on arrays ------------------------------------------------

def numpy_poly(f: Polynomial) -> Callable[..., np.ndarray]:
    """Vectorized complex evaluation of f; powers are built by repeated multiplication."""
    terms = [(m, complex(c)) for m, c in f.terms.items()]
    degs = [max((m[j] for m, _ in terms), default=0) for j in range(f.n)]

    def ev(*zs):
        zs = [np.asarray(z, dtype=complex) for z in zs]
        shape = np.broadcast(*zs).shape if zs else ()
        powers = []
        for z, d in zip(zs, degs):
            pw = [None, z]
            for _ in range(2, d + 1):
                pw.append(pw[-1] * z)
            powers.append(pw)
        out = np.zeros(shape, dtype=complex)
        for m, c in terms:
            t = None
            for pw, e in zip(powers, m):
                if e:
                    t = pw[e] if t is None else t * pw[e]
            out = out + (c if t is None else c * t)
        return out

    return ev


def _product_grid_iter(n: int, grid: DiscGrid, block: int = 1 << 20):
    """Yield flat coordinate arrays covering the grid on B^n (n = 1 or 2) in blocks."""
    nodes = grid.nodes()
    if n == 1:
        yield (nodes,)
    elif n == 2:
        step = max(1, block // nodes.size)
        for s in range(0, nodes.size, step):
            z1 = nodes[s: s + step]
            yield (np.repeat(z1, nodes.size), np.tile(nodes, z1.size))
    else:
        raise ValueError("grid evidence is implemented for n <= 2")


def F_values(fs: Sequence[Polynomial], zs) -> np.ndarray:
    return sum(np.abs(numpy_poly(f)(*zs)) ** 2 for f in fs)


# -- Lojasiewicz -----------------------------------------------------------------------

class LojasiewiczPreconditionError(ValueError):
    pass


@dataclass
class LojaCertificate:
    r: int
    c: float
    resolution: int
    max_violation: float
    refined_violation: float
    tolerance: float
    notes: List[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"r": self.r, "c": self.c, "resolution": self.resolution,
                "max_violation": self.max_violation, "refined_violation": self.refined_violation,
                "tolerance": self.tolerance, "notes": self.notes}


def _check_loja_precondition(fs: Sequence[Polynomial], g: Polynomial, notes: List[str]):
    n = g.n
    I = Ideal(n, list(fs))
    if radical_contains(I, g):
        notes.append("g lies in the radical of I, so g vanishes on M(I)")
        return
    if I.is_zero_dimensional():
        from .disc import position_of_disc, Position
        from .ideals.variety import variety_points

        for p in variety_points(I):
            pos = [position_of_disc(d) for d in p.coords]
            if Position.EXTERIOR in pos:
                continue
            val = abs(g.evaluate_complex([complex(d.center) for d in p.coords]))
            if val > 1e-9:
                raise LojasiewiczPreconditionError(f"g does not vanish at the point {p.approx()} of M(I)")
        notes.append("g vanishes at every point of M(I)")
        return
    notes.append("zero-set containment checked on grid nodes only")


def _ratio_maxima(fs, g, r_max, grid, n, ftol, c=None):
    """One pass over the grid for r = 1..r_max.

    Returns max |g|^r / F over nodes with F > ftol, max F, and (when constants ``c`` are
    given) the largest violation |g|^r - c_r F.
    """
    gp = numpy_poly(g)
    fps = [numpy_poly(f) for f in fs]
    best = np.zeros(r_max)
    viol = np.full(r_max, -np.inf)
    f_max = 0.0
    for zs in _product_grid_iter(n, grid):
        F = sum(np.abs(fp(*zs)) ** 2 for fp in fps)
        G = np.abs(gp(*zs))
        zero = F <= ftol
        if np.any(G[zero] > 1e-9):
            raise LojasiewiczPreconditionError("g is nonzero at a grid node where F vanishes")
        f_max = max(f_max, float(F.max()))
        ok = ~zero
        Fok = F[ok]
        Gr = np.ones_like(G)
        for r in range(r_max):
            Gr = Gr * G
            if Fok.size:
                best[r] = max(best[r], float(np.max(Gr[ok] / Fok)))
            if c is not None:
                viol[r] = max(viol[r], float(np.max(Gr - c[r] * F)))
    return best, f_max, viol


def lojasiewicz_search(fs: Sequence[Polynomial], g: Polynomial, r_max: int = 6, resolution: int = 64,
                       slack: float = 0.1, ftol: float = 1e-28) -> LojaCertificate:
    """Smallest r <= r_max whose grid constant c = max |g|^r / F stays put under 2x refinement.

    c is fitted on the grid, so max(|g|^r - c F) <= 0 there.  The exponent is accepted
    when the refined-grid constant exceeds c by at most the relative ``slack``; the
    certificate also reports the absolute violation max(|g|^r - c F) on the refined grid.
    """
    n = g.n
    notes: List[str] = []
    _check_loja_precondition(fs, g, notes)
    grid = DiscGrid(resolution)
    coarse, _, _ = _ratio_maxima(fs, g, r_max, grid, n, ftol)
    fine, _, fine_viol = _ratio_maxima(fs, g, r_max, grid.refine(), n, ftol, c=coarse)
    for r in range(1, r_max + 1):
        c, c_fine = float(coarse[r - 1]), float(fine[r - 1])
        if c == 0.0:
            return LojaCertificate(r, 0.0, resolution, 0.0, 0.0, slack, notes + ["g vanishes on the grid"])
        if c_fine <= (1.0 + slack) * c:
            return LojaCertificate(r, c, resolution, 0.0, float(fine_viol[r - 1]), slack,
                                   notes + [f"constant on the refined grid: {c_fine:.6g}"])
    raise LojasiewiczPreconditionError(f"no exponent r <= {r_max} gives a grid-stable constant")


# -- phi and the k = 0 decomposition -------------------------------------------------------

def phi_eval(fs: Sequence[Polynomial], g: Polynomial, s: int, t: int, z, r: Optional[int] = None,
             ftol: float = 1e-300):
    """phi_{s,t}(z) = g(z)^t / F(z)^s, and 0 where F underflows (on M(I))."""
    if r is not None and not t > r * s:
        raise ValueError("need t > r*s")
    zs = [np.asarray(c, dtype=complex) for c in z]
    F = F_values(fs, zs)
    G = numpy_poly(g)(*zs)
    with np.errstate(divide="ignore", invalid="ignore"):
        val = np.where(F > ftol, G ** t / np.where(F > ftol, F, 1.0) ** s, 0.0)
    return val if val.ndim else complex(val)


def koszul_step0_check(fs: Sequence[Polynomial], g: Polynomial, t: int, resolution: int = 64) -> float:
    """max over grid nodes of |g^t - sum_j phi_{1,t} conj(f_j) f_j|."""
    n = g.n
    grid = DiscGrid(resolution)
    gp = numpy_poly(g)
    fps = [numpy_poly(f) for f in fs]
    worst = 0.0
    for zs in _product_grid_iter(n, grid):
        vals = [fp(*zs) for fp in fps]
        F = sum(np.abs(v) ** 2 for v in vals)
        G = gp(*zs)
        with np.errstate(divide="ignore", invalid="ignore"):
            phi = np.where(F > 0, G ** t / np.where(F > 0, F, 1.0), 0.0)
        rhs = sum(phi * np.conj(v) * v for v in vals)
        worst = max(worst, float(np.max(np.abs(G ** t - rhs))))
    return worst

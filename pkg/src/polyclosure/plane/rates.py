"""Floating-point rate lab: norms of f/f_r, f^2/f_r - f and g_1k, with log-log fits.

f_r(X, Y) = f(X, rY).  Quotients P/f_r are expanded in rows (powers of Y),
each row a power series in X computed with ``scipy.signal.lfilter`` (division
by f_0(X) is an IIR filter, multiplication by f_m(X) an FIR filter).  Rows are
summed until the remaining tail, extrapolated geometrically from the recent
row-norm decay, falls below a relative tolerance.  The reported lower value is
the partial sum; the upper value adds the extrapolated tail and is an estimate,
not a certified bound.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.signal import lfilter

from ..core.polynomial import Polynomial
from .gseries import check_no_zeros_on_disc, y_coefficients


class TruncationBudgetError(RuntimeError):
    pass


@dataclass
class RateFit:
    """Least-squares fit of log(value) against log(parameter)."""

    label: str
    parameters: List[float]
    norm_lo: List[float]
    norm_hi: List[float]
    truncation: List[int]
    slope: float
    intercept: float
    residual: float
    expected: Optional[float] = None
    band: Optional[Tuple[float, float]] = None
    notes: List[str] = field(default_factory=list)

    @property
    def in_band(self) -> Optional[bool]:
        if self.band is None:
            return None
        return self.band[0] <= self.slope <= self.band[1]

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "slope": self.slope,
            "intercept": self.intercept,
            "residual": self.residual,
            "expected": self.expected,
            "band": list(self.band) if self.band else None,
            "in_band": self.in_band,
            "samples": [
                {"parameter": p, "norm_lo": lo, "norm_hi": hi, "truncation_degree": d}
                for p, lo, hi, d in zip(self.parameters, self.norm_lo, self.norm_hi, self.truncation)
            ],
            "notes": list(self.notes),
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["parameter", "norm_lo", "norm_hi", "truncation_degree"])
        for row in zip(self.parameters, self.norm_lo, self.norm_hi, self.truncation):
            w.writerow([repr(float(row[0])), repr(float(row[1])), repr(float(row[2])), int(row[3])])
        return buf.getvalue()


def fit_loglog(label: str, params: Sequence[float], values: Sequence[float], lo=None, trunc=None,
               expected=None, half_width: float = 0.15, band=None) -> RateFit:
    params = [float(p) for p in params]
    values = [float(v) for v in values]
    if len(params) < 2:
        raise ValueError("need at least two samples to fit a slope")
    if any(p <= 0 for p in params) or any(v <= 0 for v in values):
        raise ValueError("log-log fit needs positive samples")
    x = np.log(params)
    y = np.log(values)
    slope, intercept = np.polyfit(x, y, 1)
    resid = float(np.sqrt(np.mean((y - (slope * x + intercept)) ** 2)))
    if band is None and expected is not None:
        band = (expected - half_width, expected + half_width)
    return RateFit(label, params, list(lo if lo is not None else values), values,
                   list(trunc if trunc is not None else [0] * len(params)),
                   float(slope), float(intercept), resid, expected, band)


# -- row engine -----------------------------------------------------------------

def _complex_rows(f: Polynomial, real: bool = False) -> List[np.ndarray]:
    if real:
        return [np.array([float(c.re) for c in row] or [0.0]) for row in y_coefficients(f)]
    return [np.array([complex(c) for c in row] or [0j], dtype=complex) for row in y_coefficients(f)]


def _fir(kernel: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Truncated convolution kernel * x of the same length as x."""
    return np.convolve(kernel, x)[: len(x)]


@dataclass
class RowSum:
    partial: float
    tail: float
    rows: int
    x_length: int
    movement10: float

    @property
    def estimate(self) -> float:
        return self.partial + self.tail


def quotient_row_norms(P: Polynomial, f: Polynomial, r: float, subtract: Optional[Polynomial] = None,
                       rel_tol: float = 1e-6, max_rows: int = 200000, x_tol: float = 1e-13,
                       x_start: int = 256, row_callback: Optional[Callable[[int, np.ndarray], None]] = None
                       ) -> RowSum:
    """l1 norm of P/f_r - subtract, summed row by row in Y."""
    real = all(p is None or p.has_real_coefficients() for p in (P, f, subtract))
    dtype = float if real else complex
    fm = _complex_rows(f, real)
    d2 = len(fm) - 1
    fr = [fm[m] * (r ** m) for m in range(d2 + 1)]
    prow = _complex_rows(P, real)
    srow = _complex_rows(subtract, real) if subtract is not None else []
    L = max(x_start, max(len(p) for p in prow) + 8)
    hist: List[np.ndarray] = []
    norms: List[float] = []
    total = 0.0
    a0 = fr[0]
    for k in range(max_rows):
        while True:
            acc = np.zeros(L, dtype=dtype)
            if k < len(prow):
                acc[: len(prow[k])] += prow[k][:L]
            for m in range(1, min(k, d2) + 1):
                prev = hist[-m]
                if len(prev) < L:
                    prev = np.concatenate([prev, np.zeros(L - len(prev), dtype=dtype)])
                acc -= _fir(fr[m], prev)
            row = lfilter([1.0], a0, acc)
            out = row.copy()
            if k < len(srow):
                out[: len(srow[k])] -= srow[k][:L]
            rn = float(np.abs(out).sum())
            tail_block = float(np.abs(row[-max(8, L // 10):]).sum())
            scale = float(np.abs(row).sum())
            if tail_block <= x_tol * max(scale, 1e-300) or scale == 0.0:
                break
            L = int(L * 1.5) + 16
        hist.append(row)
        if len(hist) > d2:
            hist.pop(0)
        if row_callback is not None:
            row_callback(k, out)
        norms.append(rn)
        total += rn
        if k > max(len(prow), 50) and k % 25 == 0:
            w = 25
            a, b = norms[-1], norms[-1 - w]
            if a == 0.0:
                return RowSum(total, 0.0, k + 1, L, _movement(norms, total))
            if b > 0 and a < b:
                rho = (a / b) ** (1.0 / w)
                tail = a * rho / (1 - rho)
                if tail <= rel_tol * total:
                    return RowSum(total, tail, k + 1, L, _movement(norms, total))
    raise TruncationBudgetError(f"row budget {max_rows} exhausted (r={r})")


def _movement(norms, total):
    """Relative norm change from the last 10 rows (the D vs D+10 heuristic)."""
    return float(sum(norms[-10:]) / total) if total else 0.0


def approx_identity_rates(f: Polynomial, r_schedule: Sequence[float], rel_tol: float = 1e-6,
                          max_rows: int = 200000) -> Tuple[RateFit, RateFit]:
    """Fits of ||f/f_r|| and ||f^2/f_r - f|| against 1 - r."""
    check_no_zeros_on_disc(f)
    rs = [float(r) for r in r_schedule]
    if len(rs) < 2:
        raise ValueError("need at least two values of r to fit a slope")
    if any(b <= a for a, b in zip(rs, rs[1:])) or rs[0] <= 0 or rs[-1] >= 1:
        raise ValueError("r_schedule must increase strictly inside (0, 1)")
    f2 = f * f
    a_lo, a_hi, a_n, b_lo, b_hi, b_n, moves = [], [], [], [], [], [], []
    for r in rs:
        A = quotient_row_norms(f, f, r, rel_tol=rel_tol, max_rows=max_rows)
        B = quotient_row_norms(f2, f, r, subtract=f, rel_tol=rel_tol, max_rows=max_rows)
        a_lo.append(A.partial); a_hi.append(A.estimate); a_n.append(A.rows)
        b_lo.append(B.partial); b_hi.append(B.estimate); b_n.append(B.rows)
        moves.append((A.movement10, B.movement10))
    x = [1 - r for r in rs]
    fa = fit_loglog("||f/f_r|| vs 1-r", x, a_hi, a_lo, a_n, expected=-0.5)
    fb = fit_loglog("||f^2/f_r - f|| vs 1-r", x, b_hi, b_lo, b_n, expected=0.5)
    note = "truncation_degree is the number of Y-rows summed; norm_hi adds the extrapolated tail"
    fa.notes.append(note)
    fb.notes.append(note)
    for fit, idx in ((fa, 0), (fb, 1)):
        worst = max(m[idx] for m in moves)
        fit.notes.append(f"max relative movement over the last 10 rows: {worst:.3e} (heuristic threshold 1e-2)")
    return fa, fb


def closed_form_d2_one(w: float, r: float, rel_tol: float = 1e-9, max_rows: int = 200000):
    """(||f/f_r||, ||f^2/f_r - f||) for f = 1+wX+wY+XY from the explicit row formulas.

    With A = 1+wX and B = w+X, f/f_r = 1 + (1-r) sum_{k>=1} (-r)^{k-1} (B/A)^k Y^k,
    and f^2/f_r - f has rows (1-r)B and (1-r)^2 (-1)^k r^{k-2} B (B/A)^{k-1}, k >= 2.
    """
    a = np.array([1.0, w])
    b = np.array([w, 1.0])
    L = 1024
    while True:
        t = np.zeros(L)
        t[0] = 1.0
        s1, s2 = 1.0, (1 - r) * (1 + w)
        ok = True
        for k in range(1, max_rows):
            t = lfilter(b, a, t)
            if np.abs(t[-L // 10:]).sum() > 1e-14 * np.abs(t).sum():
                ok = False
                break
            nk = float(np.abs(t).sum())
            s1 += (1 - r) * r ** (k - 1) * nk
            s2 += (1 - r) ** 2 * r ** (k - 1) * float(np.abs(np.convolve(b, t)).sum())
            if k > 50 and r ** k * nk * (1 - r) < rel_tol * s1:
                return s1, s2
        if ok:
            raise TruncationBudgetError("row budget exhausted")
        L *= 2


# -- g_1k norms ---------------------------------------------------------------------

def g1k_rows(f: Polynomial, k_max: int, x_tol: float = 1e-14) -> List[np.ndarray]:
    """Float coefficient arrays of g_1k(X), k = 0..k_max."""
    check_no_zeros_on_disc(f)
    fm = _complex_rows(f)
    d2 = len(fm) - 1
    if d2 < 1:
        raise ValueError("f must depend on Y")
    L = 256
    while True:
        h = []
        ok = True
        for k in range(k_max + d2 + 1):
            acc = np.zeros(L, dtype=complex)
            if k == 0:
                acc[0] = 1.0
            for m in range(1, min(k, d2) + 1):
                acc -= lfilter(fm[m], [1.0], h[k - m])
            row = lfilter([1.0], fm[0], acc)
            if np.abs(row[-L // 10:]).sum() > x_tol * max(np.abs(row).sum(), 1e-300):
                ok = False
                break
            h.append(row)
        if ok:
            break
        L = int(L * 1.6)
    rows = []
    for k in range(k_max + 1):
        acc = np.zeros(L, dtype=complex)
        for m in range(1, d2 + 1):
            idx = k - m + 1
            if idx >= 0:
                acc += m * lfilter(fm[m], [1.0], h[idx])
        rows.append(acc)
    return rows


def norm_exponent_g1k(f: Polynomial, k_max: int = 200, k_min: int = 1) -> RateFit:
    """Fit ||g_1k|| against k+1; also reports the O((k+1)^{1/2}) bound ratio for l = 1."""
    rows = g1k_rows(f, k_max)
    ks = list(range(k_min, k_max + 1))
    vals = [float(np.abs(rows[k]).sum()) for k in ks]
    fit = fit_loglog("||g_1k|| vs k+1", [k + 1 for k in ks], vals, trunc=[len(rows[0])] * len(ks),
                     expected=0.5, half_width=0.1)
    ratios = [v / math.sqrt(k + 1) for k, v in zip(ks, vals)]
    fit.notes.append(f"||g_1k|| / (k+1)^(1/2) ranges over [{min(ratios):.4f}, {max(ratios):.4f}]")
    return fit


def mass_concentration(w: float, k: int = 100) -> float:
    """Fraction of the l1 mass of g_1k(X) for f = 1+wX+wY+XY with (1-w)/(1+w) <= j/(k+1) <= (1+w)/(1-w)."""
    from ..core.gaussian import GaussianRational
    from ..core.textfmt import parse_polynomial
    from fractions import Fraction

    wq = Fraction(w).limit_denominator(10**6)
    f = parse_polynomial(f"1 + {wq}*X1 + {wq}*X2 + X1*X2", 2)
    row = np.abs(g1k_rows(f, k)[k])
    j = np.arange(len(row))
    lo, hi = (1 - w) / (1 + w), (1 + w) / (1 - w)
    mask = (j / (k + 1) >= lo) & (j / (k + 1) <= hi)
    return float(row[mask].sum() / row.sum())


def g1k_closed_form(w: float, k: int, length: int) -> np.ndarray:
    """Coefficients of -(-(w+X)/(1+wX))^{k+1} by repeated filtering."""
    t = np.zeros(length)
    t[0] = 1.0
    for _ in range(k + 1):
        t = lfilter([-w, -1.0], [1.0, w], t)
    return -t


# -- three-variable probe ---------------------------------------------------------

def probe_polynomial(w) -> Polynomial:
    from fractions import Fraction

    from ..core.textfmt import parse_polynomial

    wq = Fraction(w).limit_denominator(10**6)
    return parse_polynomial(f"1 + {wq}*(X1 + X2 + X3 + X1*X2 + X1*X3 + X2*X3) + X1*X2*X3", 3)


def _exact_quotient_series(P: dict, F: dict, D: int) -> dict:
    """Exact power series P/F up to total degree D (F has nonzero constant term)."""
    inv0 = 1 / F[(0, 0, 0)]
    others = [(m, c) for m, c in F.items() if m != (0, 0, 0)]
    q = {}
    for d in range(D + 1):
        for a in range(d, -1, -1):
            for b in range(d - a, -1, -1):
                m = (a, b, d - a - b)
                acc = P.get(m, 0)
                for (e1, e2, e3), c in others:
                    src = (a - e1, b - e2, m[2] - e3)
                    if min(src) >= 0:
                        v = q.get(src)
                        if v:
                            acc -= c * v
                if acc:
                    q[m] = acc * inv0
    return q


def conjecture_probe_n3(w, r_schedule: Sequence, truncation: int = 24) -> dict:
    """||f^2/f_r - f|| truncated at total degree D for f_r = f(X1, X2, r X3).

    Exploratory diagnostic only.  Computed exactly over Q (the power series of
    1/f_r has large cancelling coefficients, so floating point is useless).
    """
    from fractions import Fraction

    from gmpy2 import mpq

    if not 0 < w < 1:
        raise ValueError("need 0 < w < 1")
    D = int(truncation)
    poly = probe_polynomial(w)
    F = {m: mpq(c.re) for m, c in poly.terms.items()}
    F2 = {m: mpq(c.re) for m, c in (poly * poly).terms.items()}
    samples = []
    for r in r_schedule:
        rq = mpq(Fraction(r).limit_denominator(2**40)) if not isinstance(r, Fraction) else mpq(r)
        Fr = {m: c * rq ** m[2] for m, c in F.items()}
        q = _exact_quotient_series(F2, Fr, D)
        for m, c in F.items():
            q[m] = q.get(m, 0) - c
        val = sum(abs(c) for c in q.values())
        samples.append({"r": float(rq), "value": float(val), "truncation": D})
    out = {"w": float(w), "truncation": D, "samples": samples,
           "note": "exploratory: values on a total-degree truncation, no bound claimed"}
    usable = [(1 - s["r"], s["value"]) for s in samples if s["r"] < 1 and s["value"] > 0]
    if len(usable) >= 2:
        fit = fit_loglog("probe ||f^2/f_r - f|| vs 1-r", [u for u, _ in usable], [v for _, v in usable],
                         trunc=[D] * len(usable))
        out["slope"] = fit.slope
        out["residual"] = fit.residual
        out["verdict"] = "decay" if fit.slope > 0 else "no decay"
    return out

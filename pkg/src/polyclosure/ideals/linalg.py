"""Exact linear algebra over Q(i) and the Macaulay-matrix membership oracle."""

from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Dict, List, Sequence

from ..core.gaussian import GaussianRational, ZERO
from ..core.polynomial import Polynomial


def monomials_up_to(n: int, D: int):
    """All exponent tuples of total degree <= D."""
    out = []
    for d in range(D + 1):
        for combo in combinations_with_replacement(range(n), d):
            m = [0] * n
            for j in combo:
                m[j] += 1
            out.append(tuple(m))
    return out


class RowEchelon:
    """Incrementally maintained reduced row space of sparse vectors.

    Vectors are dicts ``column -> GaussianRational``; pivots are the smallest
    column of each stored row under the given column ranking.
    """

    def __init__(self, rank=None):
        self.rank = rank or (lambda c: c)
        self.rows: Dict[object, Dict[object, GaussianRational]] = {}

    def reduce(self, v: Dict) -> Dict:
        v = {k: c for k, c in v.items() if c}
        changed = True
        while changed and v:
            changed = False
            for col in sorted(v, key=self.rank):
                row = self.rows.get(col)
                if row is None:
                    continue
                c = v[col]
                for k, a in row.items():
                    s = v.get(k, ZERO) - c * a
                    if s:
                        v[k] = s
                    else:
                        v.pop(k, None)
                changed = True
                break
        return v

    def insert(self, v: Dict) -> bool:
        """Add ``v`` to the span; returns False when it was already dependent."""
        v = self.reduce(v)
        if not v:
            return False
        piv = min(v, key=self.rank)
        inv = v[piv].inverse()
        v = {k: c * inv for k, c in v.items()}
        # keep rows fully reduced against the new pivot
        for col, row in self.rows.items():
            c = row.get(piv)
            if c:
                for k, a in v.items():
                    s = row.get(k, ZERO) - c * a
                    if s:
                        row[k] = s
                    else:
                        row.pop(k, None)
        self.rows[piv] = v
        return True

    def contains(self, v: Dict) -> bool:
        return not self.reduce(v)

    def __len__(self):
        return len(self.rows)


def macaulay_contains(gens: Sequence[Polynomial], f: Polynomial, D: int) -> bool:
    """True iff ``f`` is a Q(i)-combination of ``m * g`` with ``deg(m * g) <= D``.

    This is a degree-truncated membership test.  A True answer is a
    certificate of membership in the ideal; False only says no certificate
    exists up to degree ``D``.
    """
    if f.is_zero():
        return True
    if f.total_degree() > D:
        return False
    n = f.n
    ech = RowEchelon()
    for g in gens:
        if g.is_zero():
            continue
        dg = g.total_degree()
        if dg > D:
            continue
        for m in monomials_up_to(n, D - dg):
            ech.insert(g.mul_monomial(m).terms)
    return ech.contains(f.terms)


def solve_linear(rows: List[List[GaussianRational]], rhs: List[GaussianRational]):
    """Solve a square exact system by Gauss-Jordan; raises on singular input."""
    N = len(rows)
    A = [list(r) + [b] for r, b in zip(rows, rhs)]
    for col in range(N):
        piv = next((r for r in range(col, N) if A[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        A[col], A[piv] = A[piv], A[col]
        inv = A[col][col].inverse()
        A[col] = [x * inv for x in A[col]]
        for r in range(N):
            if r != col and A[r][col]:
                c = A[r][col]
                A[r] = [x - c * y for x, y in zip(A[r], A[col])]
    return [A[r][N] for r in range(N)]


def charpoly(M: List[List[GaussianRational]]) -> List[GaussianRational]:
    """Characteristic polynomial det(t*I - M), ascending coefficients, exact.

    Reduces to upper Hessenberg form by similarity and runs the usual
    Hessenberg determinant recurrence.
    """
    N = len(M)
    H = [list(r) for r in M]
    for k in range(N - 2):
        piv = next((r for r in range(k + 1, N) if H[r][k]), None)
        if piv is None:
            continue
        if piv != k + 1:
            H[piv], H[k + 1] = H[k + 1], H[piv]
            for row in H:
                row[piv], row[k + 1] = row[k + 1], row[piv]
        inv = H[k + 1][k].inverse()
        for r in range(k + 2, N):
            if H[r][k]:
                c = H[r][k] * inv
                H[r] = [x - c * y for x, y in zip(H[r], H[k + 1])]
                for row in H:
                    row[k + 1] = row[k + 1] + c * row[r]
    # p_0 = 1; p_{m} = (t - h_mm) p_{m-1} - sum_{i<m} h_{i,m} prod h_{j+1,j} p_{i-1}
    polys = [[GaussianRational(1)]]
    for m in range(1, N + 1):
        prev = polys[m - 1]
        cur = [ZERO] + list(prev)
        hmm = H[m - 1][m - 1]
        for idx, c in enumerate(prev):
            cur[idx] = cur[idx] - hmm * c
        prod = GaussianRational(1)
        for i in range(m - 1, 0, -1):
            prod = prod * H[i][i - 1]
            h = H[i - 1][m - 1]
            if h and prod:
                coef = h * prod
                for idx, c in enumerate(polys[i - 1]):
                    cur[idx] = cur[idx] - coef * c
        polys.append(cur)
    return polys[N]

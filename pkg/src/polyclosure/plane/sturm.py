"""Sturm sequences for real rational polynomials (ascending mpq coefficient lists)."""

from __future__ import annotations

from typing import List, Sequence, Tuple

from gmpy2 import mpq


def _trim(p):
    p = [mpq(c) for c in p]
    while p and not p[-1]:
        p.pop()
    return p


def _rem(a, b):
    a = list(a)
    inv = 1 / b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] * inv
        shift = len(a) - len(b)
        for j, bj in enumerate(b):
            a[shift + j] -= c * bj
        a = _trim(a)
    return a


def derivative(p):
    return _trim([c * k for k, c in enumerate(p)][1:])


def sturm_sequence(p: Sequence) -> List[List[mpq]]:
    p = _trim(p)
    seq = [p, derivative(p)]
    while seq[-1]:
        r = _rem(seq[-2], seq[-1])
        seq.append([-c for c in r])
    seq.pop()
    return seq


def _eval(p, x):
    acc = mpq(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _sign_changes(vals) -> int:
    signs = [v > 0 for v in vals if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _sign_at_inf(p, positive: bool) -> int:
    if not p:
        return 0
    lead = p[-1]
    deg = len(p) - 1
    s = 1 if lead > 0 else -1
    if not positive and deg % 2:
        s = -s
    return s


def count_real_roots(p: Sequence, lo=None, hi=None) -> int:
    """Distinct real roots in (lo, hi]; None means -inf / +inf."""
    p = _trim(p)
    if len(p) <= 1:
        return 0
    seq = sturm_sequence(p)
    if lo is None:
        v_lo = _sign_changes([_sign_at_inf(q, False) for q in seq])
    else:
        v_lo = _sign_changes([_eval(q, mpq(lo)) for q in seq])
    if hi is None:
        v_hi = _sign_changes([_sign_at_inf(q, True) for q in seq])
    else:
        v_hi = _sign_changes([_eval(q, mpq(hi)) for q in seq])
    return v_lo - v_hi


def cauchy_bound(p) -> mpq:
    p = _trim(p)
    lead = abs(p[-1])
    return 1 + max((abs(c) / lead for c in p[:-1]), default=mpq(0))


def isolate_real_roots(p: Sequence, width=mpq(1, 2**40)) -> List[Tuple[mpq, mpq]]:
    """Disjoint rational intervals (lo, hi], each holding exactly one real root.

    Exact rational roots hit by bisection come back as degenerate (q, q).
    """
    p = _trim(p)
    if len(p) <= 1:
        return []
    B = cauchy_bound(p)
    out = []
    stack = [(-B, B)]
    while stack:
        a, b = stack.pop()
        c = count_real_roots(p, a, b)
        if c == 0:
            continue
        if c == 1 and _eval(p, b) == 0:
            out.append((b, b))
            continue
        if c == 1 and b - a <= width:
            out.append((a, b))
            continue
        m = (a + b) / 2
        stack.append((m, b))
        stack.append((a, m))
    return sorted(out)

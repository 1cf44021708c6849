"""Dense univariate polynomials over Q(i) as ascending coefficient lists."""

from __future__ import annotations

from typing import List, Sequence, Tuple

from .gaussian import GaussianRational, ONE, ZERO

UPoly = List[GaussianRational]


def trim(p: Sequence) -> UPoly:
    p = [GaussianRational.coerce(c) for c in p]
    while p and not p[-1]:
        p.pop()
    return p


def degree(p: Sequence) -> int:
    return len(trim(p)) - 1


def add(p: Sequence, q: Sequence) -> UPoly:
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else ZERO) + (q[i] if i < len(q) else ZERO) for i in range(n)])


def sub(p: Sequence, q: Sequence) -> UPoly:
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else ZERO) - (q[i] if i < len(q) else ZERO) for i in range(n)])


def mul(p: Sequence, q: Sequence) -> UPoly:
    if not p or not q:
        return []
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] = out[i + j] + a * b
    return trim(out)


def scale(p: Sequence, c) -> UPoly:
    c = GaussianRational.coerce(c)
    return trim([a * c for a in p])


def divmod_poly(p: Sequence, q: Sequence) -> Tuple[UPoly, UPoly]:
    p = trim(p)
    q = trim(q)
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    if len(p) < len(q):
        return [], p
    inv = q[-1].inverse()
    r = list(p)
    quot = [ZERO] * (len(p) - len(q) + 1)
    for k in range(len(p) - len(q), -1, -1):
        c = r[k + len(q) - 1] * inv
        if c:
            quot[k] = c
            for j, b in enumerate(q):
                r[k + j] = r[k + j] - c * b
    return trim(quot), trim(r[: len(q) - 1])


def monic(p: Sequence) -> UPoly:
    p = trim(p)
    if not p:
        return p
    return scale(p, p[-1].inverse())


def gcd(p: Sequence, q: Sequence) -> UPoly:
    a, b = trim(p), trim(q)
    while b:
        _, r = divmod_poly(a, b)
        a, b = b, r
    return monic(a)


def derivative(p: Sequence) -> UPoly:
    return trim([c * k for k, c in enumerate(p)][1:])


def evaluate(p: Sequence, z) -> GaussianRational:
    z = GaussianRational.coerce(z)
    acc = ZERO
    for c in reversed(p):
        acc = acc * z + c
    return acc


def evaluate_complex(p: Sequence, z: complex) -> complex:
    acc = 0j
    for c in reversed(p):
        acc = acc * z + complex(c)
    return acc


def squarefree_part(p: Sequence) -> UPoly:
    p = trim(p)
    if len(p) <= 1:
        return monic(p)
    g = gcd(p, derivative(p))
    q, r = divmod_poly(p, g)
    assert not r
    return monic(q)


def yun(p: Sequence) -> List[UPoly]:
    """Squarefree decomposition: returns ``[a_1, a_2, ...]`` with p ~ prod a_k^k."""
    p = monic(p)
    if len(p) <= 1:
        return []
    out = []
    dp = derivative(p)
    a = gcd(p, dp)
    b, _ = divmod_poly(p, a)
    c, _ = divmod_poly(dp, a)
    d = sub(c, derivative(b))
    while degree(b) > 0:
        a_k = gcd(b, d)
        out.append(a_k)
        b, _ = divmod_poly(b, a_k)
        c, _ = divmod_poly(d, a_k)
        d = sub(c, derivative(b))
    while out and degree(out[-1]) == 0:
        out.pop()
    return out


def from_roots(roots: Sequence) -> UPoly:
    out: UPoly = [ONE]
    for z in roots:
        out = mul(out, [-GaussianRational.coerce(z), ONE])
    return out


def power(p: Sequence, k: int) -> UPoly:
    out: UPoly = [ONE]
    for _ in range(k):
        out = mul(out, p)
    return out

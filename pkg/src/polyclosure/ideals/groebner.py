"""Buchberger's algorithm with the sugar strategy and the Gebauer-Moeller criteria.

Polynomials are handled as plain ``{monomial: GaussianRational}`` dicts here;
the public :class:`~polyclosure.ideals.ideal.Ideal` wraps the results.
"""

from __future__ import annotations

import heapq
from typing import Dict, List, Sequence

from ..core.gaussian import GaussianRational
from ..core.polynomial import (
    Polynomial,
    monomial_div,
    monomial_divides,
    monomial_lcm,
)
from .orders import GREVLEX, MonomialOrder

Terms = Dict[tuple, GaussianRational]


class _Basis:
    """Monic polynomials with cached leading monomials."""

    def __init__(self, order: MonomialOrder):
        self.order = order
        self.polys: List[Terms] = []
        self.lms: List[tuple] = []
        self.sugar: List[int] = []

    def add(self, p: Terms, sugar: int) -> int:
        lm = self.order.leading(p)
        self.polys.append(p)
        self.lms.append(lm)
        self.sugar.append(sugar)
        return len(self.polys) - 1


def make_monic(p: Terms, order: MonomialOrder) -> Terms:
    lm = order.leading(p)
    c = p[lm]
    if c.is_one():
        return p
    inv = c.inverse()
    return {m: a * inv for m, a in p.items()}


def _sub_scaled(p: Terms, g: Terms, shift, c: GaussianRational, order, heap, seen):
    """p -= c * x^shift * g, pushing new monomials onto the heap."""
    for mg, cg in g.items():
        m = tuple(a + b for a, b in zip(mg, shift))
        v = cg * c
        if m in p:
            s = p[m] - v
            if s:
                p[m] = s
            else:
                del p[m]
        else:
            p[m] = -v
            if m not in seen:
                seen.add(m)
                heapq.heappush(heap, (order.neg_key(m), m))


def reduce_terms(p: Terms, polys: Sequence[Terms], lms: Sequence[tuple], order: MonomialOrder,
                 full: bool = True) -> Terms:
    """Normal form of ``p`` by monic ``polys`` (leading monomials ``lms``).

    With ``full=False`` only the leading term is reduced (stops at the first
    irreducible leading monomial).
    """
    p = dict(p)
    rem: Terms = {}
    heap = [(order.neg_key(m), m) for m in p]
    heapq.heapify(heap)
    seen = set(p)
    while heap:
        _, m = heapq.heappop(heap)
        seen.discard(m)
        c = p.get(m)
        if c is None:
            continue
        for g, lm in zip(polys, lms):
            if monomial_divides(lm, m):
                del p[m]
                shift = monomial_div(m, lm)
                rest = {mm: cc for mm, cc in g.items() if mm != lm}
                _sub_scaled(p, rest, shift, c, order, heap, seen)
                break
        else:
            rem[m] = c
            del p[m]
            if not full:
                rem.update(p)
                return rem
    return rem


def _spoly(f: Terms, lf: tuple, g: Terms, lg: tuple) -> Terms:
    lcm = monomial_lcm(lf, lg)
    sf = monomial_div(lcm, lf)
    sg = monomial_div(lcm, lg)
    out: Terms = {}
    for m, c in f.items():
        if m == lf:
            continue
        out[tuple(a + b for a, b in zip(m, sf))] = c
    for m, c in g.items():
        if m == lg:
            continue
        mm = tuple(a + b for a, b in zip(m, sg))
        if mm in out:
            s = out[mm] - c
            if s:
                out[mm] = s
            else:
                del out[mm]
        else:
            out[mm] = -c
    return out


def _coprime(a: tuple, b: tuple) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def buchberger(gens: Sequence[Terms], order: MonomialOrder = GREVLEX, max_pairs: int = 200_000) -> List[Terms]:
    """Reduced Groebner basis (monic, sorted by decreasing leading monomial)."""
    B = _Basis(order)
    gens = [dict(g) for g in gens if g]
    if not gens:
        return []
    # inter-reduce the input a little: sort by leading monomial so small ones come first
    gens = [make_monic(g, order) for g in gens]
    gens.sort(key=lambda g: order.key(order.leading(g)))
    G: List[int] = []
    pairs: List[tuple] = []  # (sugar, lcm key, i, j, lcm)

    def update(h: int):
        nonlocal G, pairs
        lh = B.lms[h]
        cand = []
        for g in G:
            lg = B.lms[g]
            lcm = monomial_lcm(lh, lg)
            sug = max(B.sugar[h] + sum(lcm) - sum(lh), B.sugar[g] + sum(lcm) - sum(lg))
            cand.append((g, lcm, sug, _coprime(lh, lg)))
        # chain criterion: drop (h, g) when some lcm(h, g') strictly divides lcm(h, g)
        cand = [
            c for c in cand
            if not any(d[1] != c[1] and monomial_divides(d[1], c[1]) for d in cand)
        ]
        # among equal lcms keep one pair, or none if one of them is coprime
        groups: Dict[tuple, list] = {}
        for c in cand:
            groups.setdefault(c[1], []).append(c)
        keep = []
        for grp in groups.values():
            if any(c[3] for c in grp):
                continue
            keep.append(min(grp, key=lambda c: c[2]))
        new_pairs = [(sug, order.key(lcm), g, h, lcm) for g, lcm, sug, _ in keep]
        # Gebauer-Moeller: drop old pairs whose lcm is strictly divisible through h
        old = []
        for p in pairs:
            _, _, i, j, lcm = p
            if monomial_divides(lh, lcm):
                l1 = monomial_lcm(B.lms[i], lh)
                l2 = monomial_lcm(B.lms[j], lh)
                if l1 != lcm and l2 != lcm:
                    continue
            old.append(p)
        pairs = old + new_pairs
        heapq.heapify(pairs)
        G = [g for g in G if not monomial_divides(lh, B.lms[g])] + [h]

    for g in gens:
        polys = [B.polys[i] for i in G]
        lms = [B.lms[i] for i in G]
        r = reduce_terms(g, polys, lms, order)
        if r:
            r = make_monic(r, order)
            h = B.add(r, max(sum(m) for m in g))
            update(h)

    processed = 0
    while pairs:
        sug, _, i, j, lcm = heapq.heappop(pairs)
        processed += 1
        if processed > max_pairs:
            raise RuntimeError("Groebner basis computation exceeded its pair budget")
        s = _spoly(B.polys[i], B.lms[i], B.polys[j], B.lms[j])
        if not s:
            continue
        polys = [B.polys[k] for k in G]
        lms = [B.lms[k] for k in G]
        r = reduce_terms(s, polys, lms, order)
        if r:
            r = make_monic(r, order)
            h = B.add(r, sug)
            if all(x == 0 for x in B.lms[h]):
                return [{B.lms[h]: GaussianRational(1)}]
            update(h)

    return reduce_basis([B.polys[k] for k in G], order)


def reduce_basis(polys: Sequence[Terms], order: MonomialOrder) -> List[Terms]:
    """Minimal, inter-reduced, monic basis sorted by decreasing leading monomial."""
    polys = [make_monic(p, order) for p in polys if p]
    lms = [order.leading(p) for p in polys]
    keep = []
    for i, lm in enumerate(lms):
        dominated = False
        for j, lm2 in enumerate(lms):
            if j == i:
                continue
            if monomial_divides(lm2, lm) and (lm2 != lm or j < i):
                dominated = True
                break
        if not dominated:
            keep.append(i)
    polys = [polys[i] for i in keep]
    lms = [lms[i] for i in keep]
    out = []
    for i, p in enumerate(polys):
        others = [polys[j] for j in range(len(polys)) if j != i]
        olms = [lms[j] for j in range(len(polys)) if j != i]
        tail = {m: c for m, c in p.items() if m != lms[i]}
        r = reduce_terms(tail, others, olms, order)
        r[lms[i]] = GaussianRational(1)
        out.append(r)
    out.sort(key=lambda p: order.key(order.leading(p)), reverse=True)
    return out


def groebner_polys(gens: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> List[Polynomial]:
    if not gens:
        return []
    n = gens[0].n
    return [Polynomial._from_clean(n, g) for g in buchberger([g.terms for g in gens], order)]


def s_polynomials_reduce_to_zero(basis: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> bool:
    """Buchberger's criterion, checked directly on every pair."""
    polys = [make_monic(dict(b.terms), order) for b in basis if b]
    lms = [order.leading(p) for p in polys]
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            s = _spoly(polys[i], lms[i], polys[j], lms[j])
            if reduce_terms(s, polys, lms, order):
                return False
    return True

"""Ideals of Q(i)[X1..Xn] with cached reduced Groebner bases."""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence

from ..core.gaussian import GaussianRational
from ..core.polynomial import Polynomial, monomial_divides
from ..core.textfmt import format_polynomial, parse_polynomial
from .groebner import buchberger, reduce_terms
from .orders import GREVLEX, MonomialOrder, elimination_order, order_from_tag


class NotZeroDimensionalError(ValueError):
    pass


class Ideal:
    """Generator list plus write-once caches of reduced bases per order."""

    def __init__(self, n: int, generators: Sequence[Polynomial] = ()):
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                g = Polynomial.constant(n, g)
            if g.n != n:
                raise ValueError(f"generator has n={g.n}, ideal has n={n}")
            if g:
                gens.append(g)
        self.n = n
        self.generators: tuple = tuple(gens)
        self._bases: Dict[str, List[Polynomial]] = {}

    # -- construction helpers ---------------------------------------------
    @classmethod
    def from_strings(cls, texts: Sequence[str], n: Optional[int] = None) -> "Ideal":
        polys = [parse_polynomial(t) for t in texts]
        if n is None:
            n = max((p.n for p in polys), default=1)
        return cls(n, [parse_polynomial(t, n) for t in texts])

    @classmethod
    def unit(cls, n: int) -> "Ideal":
        return cls(n, [Polynomial.one(n)])

    @classmethod
    def zero(cls, n: int) -> "Ideal":
        return cls(n, [])

    @classmethod
    def principal(cls, f: Polynomial) -> "Ideal":
        return cls(f.n, [f])

    # -- bases --------------------------------------------------------------
    def groebner(self, order: MonomialOrder = GREVLEX) -> List[Polynomial]:
        tag = order.tag
        basis = self._bases.get(tag)
        if basis is None:
            raw = buchberger([g.terms for g in self.generators], order)
            basis = [Polynomial._from_clean(self.n, t) for t in raw]
            self._bases[tag] = basis
        return basis

    @property
    def basis(self) -> List[Polynomial]:
        return self.groebner(GREVLEX)

    def leading_monomials(self, order: MonomialOrder = GREVLEX):
        return [order.leading(g.terms) for g in self.groebner(order)]

    def normal_form(self, f: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
        G = self.groebner(order)
        lms = [order.leading(g.terms) for g in G]
        return Polynomial._from_clean(self.n, reduce_terms(f.terms, [g.terms for g in G], lms, order))

    def contains(self, f) -> bool:
        if not isinstance(f, Polynomial):
            f = Polynomial.constant(self.n, f)
        if f.is_zero():
            return True
        return self.normal_form(f).is_zero()

    def __contains__(self, f) -> bool:
        return self.contains(f)

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.generators)

    def is_unit(self) -> bool:
        b = self.basis
        return len(b) == 1 and b[0].is_constant() and not b[0].is_zero()

    def is_zero(self) -> bool:
        return not self.generators

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.n == other.n and self.basis == other.basis

    def __hash__(self):
        return hash((self.n, tuple(self.basis)))

    def __repr__(self):
        return f"Ideal({self.n}, [{', '.join(format_polynomial(g) for g in self.generators)}])"

    def basis_strings(self) -> List[str]:
        return [format_polynomial(g) for g in self.basis]

    def to_json(self) -> dict:
        return {"n": self.n, "order": GREVLEX.tag, "basis": self.basis_strings()}

    @classmethod
    def from_json(cls, obj: dict) -> "Ideal":
        n = obj["n"]
        ideal = cls(n, [parse_polynomial(t, n) for t in obj.get("basis", obj.get("generators", []))])
        return ideal

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other: "Ideal") -> "Ideal":
        return ideal_sum(self, other)

    def __mul__(self, other: "Ideal") -> "Ideal":
        return ideal_product(self, other)

    def __pow__(self, k: int) -> "Ideal":
        out = Ideal.unit(self.n)
        for _ in range(k):
            out = ideal_product(out, self)
        return out

    def __and__(self, other: "Ideal") -> "Ideal":
        return ideal_intersect(self, other)

    # -- dimension ------------------------------------------------------------
    def is_zero_dimensional(self) -> bool:
        if self.is_unit():
            return True
        lms = self.leading_monomials()
        for j in range(self.n):
            if not any(m[j] > 0 and sum(m) == m[j] for m in lms):
                return False
        return True

    def standard_monomials(self) -> List[tuple]:
        """Monomials outside the leading-term ideal (grevlex), ascending."""
        if not self.is_zero_dimensional():
            raise NotZeroDimensionalError("quotient ring is not finite dimensional")
        if self.is_unit():
            return []
        lms = self.leading_monomials()
        bounds = []
        for j in range(self.n):
            bounds.append(min(m[j] for m in lms if m[j] > 0 and sum(m) == m[j]))
        out = []

        def rec(prefix):
            j = len(prefix)
            if j == self.n:
                m = tuple(prefix)
                if not any(monomial_divides(l, m) for l in lms):
                    out.append(m)
                return
            for e in range(bounds[j]):
                rec(prefix + [e])

        rec([])
        out.sort(key=GREVLEX.key)
        return out

    def codimension(self) -> int:
        """dim_C C[X]/I for zero-dimensional I."""
        return len(self.standard_monomials())


def _common_n(*ideals: Ideal) -> int:
    n = ideals[0].n
    if any(I.n != n for I in ideals):
        raise ValueError("ideals live in different polynomial rings")
    return n


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    n = _common_n(I, J)
    return Ideal(n, list(I.generators) + list(J.generators))


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    n = _common_n(I, J)
    gi = I.basis if len(I.basis) <= len(I.generators) else I.generators
    gj = J.basis if len(J.basis) <= len(J.generators) else J.generators
    return Ideal(n, [f * g for f in gi for g in gj])


def eliminate(I: Ideal, variables: Sequence[int]) -> Ideal:
    """I ∩ C[other variables], still written in all n variables (0-based ``variables``)."""
    order = elimination_order(I.n, variables)
    G = I.groebner(order)
    keep = [g for g in G if not any(g.depends_on(j + 1) for j in variables)]
    return Ideal(I.n, keep)


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J as the elimination of t from t*I + (1-t)*J."""
    n = _common_n(I, J)
    if I.is_unit():
        return Ideal(n, J.basis)
    if J.is_unit():
        return Ideal(n, I.basis)
    if I.is_zero() or J.is_zero():
        return Ideal.zero(n)
    pos = list(range(1, n + 1))
    t = Polynomial.variable(n + 1, 1)
    gens = [t * g.embed(n + 1, pos) for g in I.basis]
    gens += [(1 - t) * g.embed(n + 1, pos) for g in J.basis]
    big = Ideal(n + 1, gens)
    E = eliminate(big, [0])
    return Ideal(n, [g.drop_variables(pos) for g in E.generators])


def exact_quotient(f: Polynomial, g: Polynomial) -> Polynomial:
    """f / g when g divides f exactly; raises otherwise."""
    q = Ideal(g.n, [g])
    G = q.basis[0]
    order = GREVLEX
    lm = order.leading(G.terms)
    lc = g.terms[order.leading(g.terms)]
    # long division by the monic associate
    rem = dict(f.terms)
    quot: Dict[tuple, GaussianRational] = {}
    while rem:
        m = order.leading(rem)
        if not monomial_divides(lm, m):
            raise ValueError("polynomial division is not exact")
        shift = tuple(a - b for a, b in zip(m, lm))
        c = rem[m]
        quot[shift] = quot.get(shift, GaussianRational(0)) + c
        for mg, cg in G.terms.items():
            mm = tuple(a + b for a, b in zip(mg, shift))
            v = rem.get(mm, GaussianRational(0)) - c * cg
            if v:
                rem[mm] = v
            else:
                rem.pop(mm, None)
    return Polynomial(f.n, quot) * lc.inverse()


def divides(g: Polynomial, f: Polynomial) -> bool:
    try:
        exact_quotient(f, g)
        return True
    except ValueError:
        return False


def ideal_colon_principal(I: Ideal, f: Polynomial) -> Ideal:
    """I : (f) = (I ∩ (f)) / f."""
    if f.is_zero():
        return Ideal.unit(I.n)
    inter = ideal_intersect(I, Ideal.principal(f))
    return Ideal(I.n, [exact_quotient(g, f) for g in inter.generators])


def ideal_colon(I: Ideal, J: Ideal) -> Ideal:
    """I : J = ∩_g I : (g) over generators g of J."""
    n = _common_n(I, J)
    gens = J.basis
    if not gens:
        return Ideal.unit(n)
    out = None
    for g in gens:
        c = ideal_colon_principal(I, g)
        out = c if out is None else ideal_intersect(out, c)
    return out


def radical_contains(I: Ideal, g: Polynomial) -> bool:
    """g ∈ Rad(I) iff 1 ∈ I + (1 - T*g) in one more variable."""
    n = I.n
    if g.is_zero():
        return True
    pos = list(range(n))
    T = Polynomial.variable(n + 1, n + 1)
    gens = [h.embed(n + 1, pos) for h in I.generators]
    gens.append(1 - T * g.embed(n + 1, pos))
    return Ideal(n + 1, gens).is_unit()


def groebner_basis(I: Ideal, order: MonomialOrder = GREVLEX) -> Ideal:
    """The reduced basis under ``order`` as a new ideal (with that basis cached)."""
    G = I.groebner(order)
    out = Ideal(I.n, G)
    out._bases[order.tag] = G
    return out


def contains(I: Ideal, f: Polynomial) -> bool:
    return I.contains(f)


def is_zero_dimensional(I: Ideal) -> bool:
    return I.is_zero_dimensional()


def ideal_from_tagged_json(obj: dict) -> Ideal:
    n = obj["n"]
    I = Ideal(n, [parse_polynomial(t, n) for t in obj["basis"]])
    if "order" in obj:
        I.groebner(order_from_tag(obj["order"]))
    return I


def poly_lcm(f: Polynomial, g: Polynomial) -> Polynomial:
    """Generator of (f) ∩ (g), made monic for grevlex."""
    inter = ideal_intersect(Ideal.principal(f), Ideal.principal(g))
    return inter.basis[0]


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic greatest common divisor via f*g = gcd * lcm."""
    if f.is_zero():
        return g.content_normalized() if g else g
    if g.is_zero():
        return f.content_normalized()
    if f.is_constant() or g.is_constant():
        return Polynomial.one(f.n)
    return exact_quotient(f * g, poly_lcm(f, g)).content_normalized()


def is_squarefree(f: Polynomial) -> bool:
    """gcd(f, all partial derivatives) is constant (characteristic zero)."""
    h = f
    for j in range(1, f.n + 1):
        d = f.partial_derivative(j)
        if d:
            h = poly_gcd(h, d)
        if h.is_constant():
            return True
    return h.is_constant()

"""Sparse multivariate polynomials over the Gaussian rationals.

Monomials are plain tuples of nonnegative exponents of length ``n``.  Public
variable indices are 1-based to match the ``X1..Xn`` naming of the text
format; exponent tuples are indexed from 0 internally.
"""

from __future__ import annotations

from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .gaussian import ONE, ZERO, GaussianRational

Monomial = Tuple[int, ...]


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """True iff ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_degree(a: Monomial) -> int:
    return sum(a)


def grevlex_key(m: Monomial):
    return (sum(m), tuple(-x for x in reversed(m)))


class Polynomial:
    """Immutable sparse polynomial in ``n`` variables.

    ``terms`` maps exponent tuples to nonzero :class:`GaussianRational`
    coefficients.  Equality is equality of the term maps (and of ``n``).
    """

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Monomial, object] | None = None):
        self.n = n
        clean: Dict[Monomial, GaussianRational] = {}
        if terms:
            for m, c in terms.items():
                m = tuple(int(e) for e in m)
                if len(m) != n:
                    raise ValueError(f"monomial {m} has wrong length for n={n}")
                if any(e < 0 for e in m):
                    raise ValueError(f"negative exponent in {m}")
                c = GaussianRational.coerce(c)
                if c:
                    clean[m] = clean[m] + c if m in clean else c
                    if not clean[m]:
                        del clean[m]
        self.terms = clean
        self._hash = None

    @classmethod
    def _from_clean(cls, n: int, terms: Dict[Monomial, GaussianRational]) -> "Polynomial":
        obj = object.__new__(cls)
        obj.n = n
        obj.terms = terms
        obj._hash = None
        return obj

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls._from_clean(n, {})

    @classmethod
    def constant(cls, n: int, c) -> "Polynomial":
        c = GaussianRational.coerce(c)
        return cls._from_clean(n, {(0,) * n: c} if c else {})

    @classmethod
    def one(cls, n: int) -> "Polynomial":
        return cls.constant(n, ONE)

    @classmethod
    def variable(cls, n: int, j: int) -> "Polynomial":
        """The variable ``X_j`` (1-based)."""
        if not 1 <= j <= n:
            raise IndexError(f"variable index {j} out of range 1..{n}")
        m = [0] * n
        m[j - 1] = 1
        return cls._from_clean(n, {tuple(m): ONE})

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1) -> "Polynomial":
        return cls(len(exps), {tuple(exps): c})

    @classmethod
    def from_univariate(cls, coeffs: Sequence, n: int = 1, j: int = 1) -> "Polynomial":
        """Build ``sum coeffs[k] * X_j^k`` (coefficients in ascending order)."""
        terms = {}
        for k, c in enumerate(coeffs):
            m = [0] * n
            m[j - 1] = k
            terms[tuple(m)] = c
        return cls(n, terms)

    # -- basic queries ----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0,) * self.n in self.terms)

    def constant_term(self) -> GaussianRational:
        return self.terms.get((0,) * self.n, ZERO)

    def coefficient(self, m: Monomial) -> GaussianRational:
        return self.terms.get(tuple(m), ZERO)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def degree_in(self, j: int) -> int:
        if not self.terms:
            return -1
        return max(m[j - 1] for m in self.terms)

    def depends_on(self, j: int) -> bool:
        return any(m[j - 1] for m in self.terms)

    def sorted_terms(self, key=grevlex_key, reverse: bool = True):
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=reverse)

    def __len__(self):
        return len(self.terms)

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.n != self.n:
                raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")
            return other
        return Polynomial.constant(self.n, other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            if m in terms:
                s = terms[m] + c
                if s:
                    terms[m] = s
                else:
                    del terms[m]
            else:
                terms[m] = c
        return Polynomial._from_clean(self.n, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._from_clean(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = GaussianRational.coerce(other)
            if not c:
                return Polynomial.zero(self.n)
            return Polynomial._from_clean(self.n, {m: a * c for m, a in self.terms.items()})
        other = self._coerce(other)
        if len(self.terms) < len(other.terms):
            a_items, b_items = list(self.terms.items()), list(other.terms.items())
        else:
            a_items, b_items = list(other.terms.items()), list(self.terms.items())
        terms: Dict[Monomial, GaussianRational] = {}
        for ma, ca in a_items:
            for mb, cb in b_items:
                m = tuple(x + y for x, y in zip(ma, mb))
                c = ca * cb
                if m in terms:
                    terms[m] = terms[m] + c
                else:
                    terms[m] = c
        return Polynomial._from_clean(self.n, {m: c for m, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers need a nonnegative integer exponent")
        result = Polynomial.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> "Polynomial":
        return self * GaussianRational.coerce(c)

    def mul_monomial(self, mono: Monomial, c=ONE) -> "Polynomial":
        c = GaussianRational.coerce(c)
        return Polynomial._from_clean(
            self.n, {monomial_mul(m, mono): a * c for m, a in self.terms.items()}
        )

    # -- equality ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.n == other.n and self.terms == other.terms
        try:
            c = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == ({(0,) * self.n: c} if c else {})

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    # -- evaluation & substitution ----------------------------------------
    def evaluate(self, point: Sequence) -> GaussianRational:
        """Exact value at a point with Gaussian rational coordinates."""
        if len(point) != self.n:
            raise ValueError(f"point has {len(point)} coordinates, polynomial has n={self.n}")
        z = [GaussianRational.coerce(c) for c in point]
        powers = [dict() for _ in range(self.n)]
        total = ZERO
        for m, c in self.terms.items():
            t = c
            for j, e in enumerate(m):
                if e:
                    cache = powers[j]
                    if e not in cache:
                        cache[e] = z[j] ** e
                    t = t * cache[e]
            total = total + t
        return total

    def evaluate_complex(self, point: Sequence[complex]) -> complex:
        total = 0j
        for m, c in self.terms.items():
            t = complex(c)
            for j, e in enumerate(m):
                if e:
                    t *= point[j] ** e
            total += t
        return total

    def scale_variable(self, j: int, c) -> "Polynomial":
        """Substitute ``X_j -> c * X_j``."""
        if not 1 <= j <= self.n:
            raise IndexError(f"variable index {j} out of range 1..{self.n}")
        c = GaussianRational.coerce(c)
        cache = {}
        terms = {}
        for m, a in self.terms.items():
            e = m[j - 1]
            if e not in cache:
                cache[e] = c ** e
            v = a * cache[e]
            if v:
                terms[m] = v
        return Polynomial._from_clean(self.n, terms)

    def partial_derivative(self, j: int, order: int = 1) -> "Polynomial":
        if order < 0:
            raise ValueError("derivative order must be >= 0")
        if not 1 <= j <= self.n:
            raise IndexError(f"variable index {j} out of range 1..{self.n}")
        terms = {}
        for m, a in self.terms.items():
            e = m[j - 1]
            if e < order:
                continue
            fall = 1
            for t in range(order):
                fall *= e - t
            mm = list(m)
            mm[j - 1] = e - order
            terms[tuple(mm)] = a * fall
        return Polynomial._from_clean(self.n, terms)

    def substitute(self, j: int, value) -> "Polynomial":
        """Substitute a constant for ``X_j`` (the variable stays, with degree 0)."""
        v = GaussianRational.coerce(value)
        terms: Dict[Monomial, GaussianRational] = {}
        for m, a in self.terms.items():
            e = m[j - 1]
            mm = list(m)
            mm[j - 1] = 0
            mm = tuple(mm)
            c = a * (v ** e)
            terms[mm] = terms[mm] + c if mm in terms else c
        return Polynomial._from_clean(self.n, {m: c for m, c in terms.items() if c})

    def compose(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Substitute ``X_j -> images[j-1]`` (all images share a variable count)."""
        if len(images) != self.n:
            raise ValueError("need one image per variable")
        n_out = images[0].n
        result = Polynomial.zero(n_out)
        pcache = [dict() for _ in range(self.n)]
        for m, a in self.terms.items():
            t = Polynomial.constant(n_out, a)
            for j, e in enumerate(m):
                if e:
                    if e not in pcache[j]:
                        pcache[j][e] = images[j] ** e
                    t = t * pcache[j][e]
            result = result + t
        return result

    def embed(self, n_new: int, positions: Sequence[int]) -> "Polynomial":
        """Move into ``n_new`` variables, old variable k -> new variable positions[k] (0-based)."""
        terms = {}
        for m, a in self.terms.items():
            mm = [0] * n_new
            for k, e in enumerate(m):
                mm[positions[k]] = e
            terms[tuple(mm)] = a
        return Polynomial._from_clean(n_new, terms)

    def drop_variables(self, keep: Sequence[int]) -> "Polynomial":
        """Restrict to the 0-based variables in ``keep``; others must not occur."""
        terms = {}
        for m, a in self.terms.items():
            if any(m[k] for k in range(self.n) if k not in keep):
                raise ValueError("polynomial depends on a dropped variable")
            terms[tuple(m[k] for k in keep)] = a
        return Polynomial._from_clean(len(keep), terms)

    def swap_variables(self, i: int, j: int) -> "Polynomial":
        perm = list(range(self.n))
        perm[i - 1], perm[j - 1] = perm[j - 1], perm[i - 1]
        return self.embed(self.n, perm)

    def conjugate_coefficients(self) -> "Polynomial":
        return Polynomial._from_clean(self.n, {m: c.conjugate() for m, c in self.terms.items()})

    def real_imag_parts(self):
        """Split into rational polynomials ``P, Q`` with self = P + i*Q."""
        re = {m: GaussianRational(c.re) for m, c in self.terms.items() if c.re}
        im = {m: GaussianRational(c.im) for m, c in self.terms.items() if c.im}
        return Polynomial._from_clean(self.n, re), Polynomial._from_clean(self.n, im)

    def has_real_coefficients(self) -> bool:
        return all(not c.im for c in self.terms.values())

    def truncate(self, degree: int) -> "Polynomial":
        return Polynomial._from_clean(
            self.n, {m: c for m, c in self.terms.items() if sum(m) <= degree}
        )

    def homogeneous_components(self) -> Dict[int, "Polynomial"]:
        parts: Dict[int, Dict[Monomial, GaussianRational]] = {}
        for m, c in self.terms.items():
            parts.setdefault(sum(m), {})[m] = c
        return {d: Polynomial._from_clean(self.n, t) for d, t in parts.items()}

    def coefficients_in(self, j: int) -> Dict[int, "Polynomial"]:
        """Collect as ``sum_k P_k * X_j^k`` with ``P_k`` free of ``X_j``."""
        out: Dict[int, Dict[Monomial, GaussianRational]] = {}
        for m, c in self.terms.items():
            e = m[j - 1]
            mm = list(m)
            mm[j - 1] = 0
            out.setdefault(e, {})[tuple(mm)] = c
        return {e: Polynomial._from_clean(self.n, t) for e, t in out.items()}

    def univariate_coeffs(self, j: int = 1):
        """Ascending coefficient list in ``X_j``; requires no other variable."""
        deg = self.degree_in(j)
        coeffs = [ZERO] * (deg + 1)
        for m, c in self.terms.items():
            if any(e for k, e in enumerate(m) if k != j - 1):
                raise ValueError("polynomial is not univariate in the requested variable")
            coeffs[m[j - 1]] = c
        return coeffs

    def content_normalized(self) -> "Polynomial":
        """Divide by the leading (grevlex) coefficient."""
        if not self.terms:
            return self
        lead = max(self.terms, key=grevlex_key)
        return self * self.terms[lead].inverse()

    # -- text ---------------------------------------------------------------
    def __str__(self):
        from .textfmt import format_polynomial

        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self.n}, {str(self)!r})"


def variables(n: int):
    """Tuple ``(X1, ..., Xn)`` of variable polynomials."""
    return tuple(Polynomial.variable(n, j) for j in range(1, n + 1))


def linear_form(n: int, j: int, z) -> Polynomial:
    """``X_j - z``."""
    return Polynomial.variable(n, j) - GaussianRational.coerce(z)


def evaluate(f: Polynomial, z: Sequence) -> GaussianRational:
    return f.evaluate(z)


def scale_variable(f: Polynomial, j: int, c) -> Polynomial:
    return f.scale_variable(j, c)


def partial_derivative(f: Polynomial, j: int, order: int = 1) -> Polynomial:
    return f.partial_derivative(j, order)


def poly_sum(polys: Iterable[Polynomial], n: int) -> Polynomial:
    out = Polynomial.zero(n)
    for p in polys:
        out = out + p
    return out

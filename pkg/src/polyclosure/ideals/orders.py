"""Monomial orders.  Each order exposes an integer-tuple sort key."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Tuple


@dataclass(frozen=True)
class MonomialOrder:
    """``kind`` is ``grevlex``, ``lex`` or ``block``.

    ``perm`` lists 0-based variable positions from most to least significant.
    For ``block`` orders the first ``split`` variables of ``perm`` form an
    eliminating grevlex block compared before a grevlex block on the rest.
    """

    kind: str = "grevlex"
    perm: Tuple[int, ...] | None = None
    split: int = 0
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")

    @property
    def tag(self) -> str:
        if self.kind == "block":
            return f"block{self.split}:{','.join(map(str, self.perm or ()))}"
        if self.perm is None:
            return self.kind
        return f"{self.kind}:{','.join(map(str, self.perm))}"

    def _perm(self, n: int):
        return tuple(range(n)) if self.perm is None else self.perm

    def key(self, m) -> Tuple[int, ...]:
        """Larger key = larger monomial."""
        k = self._cache.get(m)
        if k is not None:
            return k
        p = self._perm(len(m))
        e = [m[j] for j in p]
        if self.kind == "lex":
            k = tuple(e)
        elif self.kind == "grevlex":
            k = (sum(e),) + tuple(-x for x in reversed(e))
        else:
            a, b = e[: self.split], e[self.split:]
            k = (sum(a),) + tuple(-x for x in reversed(a)) + (sum(b),) + tuple(-x for x in reversed(b))
        if len(self._cache) < 500_000:
            self._cache[m] = k
        return k

    def neg_key(self, m) -> Tuple[int, ...]:
        return tuple(-x for x in self.key(m))

    def leading(self, terms) -> tuple:
        return max(terms, key=self.key)


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def elimination_order(n: int, eliminate) -> MonomialOrder:
    """Block order eliminating the 0-based variables in ``eliminate``."""
    elim = tuple(sorted(eliminate))
    rest = tuple(j for j in range(n) if j not in elim)
    return MonomialOrder("block", elim + rest, len(elim))


def order_from_tag(tag: str) -> MonomialOrder:
    if tag in ("grevlex", "lex"):
        return MonomialOrder(tag)
    kind, _, perm = tag.partition(":")
    if kind.startswith("block"):
        return MonomialOrder("block", tuple(int(x) for x in perm.split(",")), int(kind[5:]))
    return MonomialOrder(kind, tuple(int(x) for x in perm.split(",")))

"""Text format for polynomials.

Grammar (whitespace is ignored between tokens)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^' natural]
    atom   := number ['i'] | 'i' | 'X' natural | 'X' | 'Y' | '(' expr ')'
    number := natural ['/' natural] | natural '.' digits

``4/5i`` means ``(4/5)*i``.  Bare ``X`` and ``Y`` are aliases for ``X1`` and
``X2``.  The printer emits terms in descending graded reverse lexicographic
order, e.g. ``(3/5+4/5i)*X1^2*X2 - 1/2``, and ``parse(print(p)) == p``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .gaussian import GaussianRational, I, ONE, _qstr
from .polynomial import Polynomial, grevlex_key


class PolynomialSyntaxError(ValueError):
    """Raised for malformed polynomial text; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d+|/\d+)?)|(?P<var>X\d+|X|Y)|(?P<imag>i)|(?P<op>[-+*^()]))"
)


def _tokenize(text: str):
    pos = 0
    toks = []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            ch = text[pos]
            if ch.isalpha():
                raise PolynomialSyntaxError(
                    f"unknown symbol or non-rational literal starting with {ch!r}", pos, text
                )
            raise PolynomialSyntaxError(f"unexpected character {ch!r}", pos, text)
        start = m.start(m.lastgroup)
        kind = m.lastgroup
        val = m.group(kind)
        # a number glued to letters other than 'i' (e.g. 1e5, 2X1) is rejected
        toks.append((kind, val, start))
        pos = m.end()
        if kind == "num" and pos < len(text) and (text[pos].isalpha() and text[pos] != "i"):
            raise PolynomialSyntaxError(f"non-rational literal {val + text[pos]!r}", start, text)
        if kind == "num" and pos < len(text) and text[pos] == ".":
            raise PolynomialSyntaxError("malformed decimal literal", pos, text)
    return toks


def _var_index(tok: str) -> int:
    if tok == "X":
        return 1
    if tok == "Y":
        return 2
    return int(tok[1:])


class _Parser:
    def __init__(self, text: str, n: int):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.n = n

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None, len(self.text))

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def error(self, msg):
        raise PolynomialSyntaxError(msg, self.peek()[2], self.text)

    def expr(self) -> Polynomial:
        kind, val, _ = self.peek()
        sign = 1
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        acc = self.term() * sign
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                acc = acc + t if val == "+" else acc - t
            else:
                return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> Polynomial:
        base = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val, pos = self.peek()
            if kind != "num" or not val.isdigit():
                self.error("exponent must be a nonnegative integer")
            self.take()
            return base ** int(val)
        return base

    def atom(self) -> Polynomial:
        kind, val, pos = self.peek()
        if kind == "num":
            self.take()
            q = Fraction(val)
            k2, v2, _ = self.peek()
            if k2 == "imag":
                self.take()
                return Polynomial.constant(self.n, GaussianRational(0, q))
            return Polynomial.constant(self.n, GaussianRational(q))
        if kind == "imag":
            self.take()
            return Polynomial.constant(self.n, I)
        if kind == "var":
            self.take()
            j = _var_index(val)
            if j < 1:
                raise PolynomialSyntaxError("variable indices start at 1", pos, self.text)
            return Polynomial.variable(self.n, j)
        if kind == "op" and val == "(":
            self.take()
            inner = self.expr()
            k2, v2, _ = self.peek()
            if not (k2 == "op" and v2 == ")"):
                self.error("expected ')'")
            self.take()
            return inner
        if kind is None:
            self.error("unexpected end of input")
        self.error(f"unexpected token {val!r}")


def parse_polynomial(text: str, n: int | None = None) -> Polynomial:
    """Parse polynomial text.  ``n`` defaults to the largest variable index used (at least 1)."""
    if not isinstance(text, str):
        raise TypeError("polynomial text must be a string")
    toks = _tokenize(text)
    if not toks:
        raise PolynomialSyntaxError("empty polynomial", 0, text)
    used = max((_var_index(v) for k, v, _ in toks if k == "var"), default=1)
    if n is None:
        n = max(used, 1)
    elif used > n:
        raise ValueError(f"text uses X{used} but n={n}")
    p = _Parser(text, n)
    result = p.expr()
    if p.i != len(p.toks):
        p.error(f"unexpected token {p.peek()[1]!r}")
    return result


def parse_polynomials(texts, n: int | None = None):
    """Parse several polynomials into a common variable count."""
    if n is None:
        n = max(parse_polynomial(t).n for t in texts) if texts else 1
    return [parse_polynomial(t, n) for t in texts]


def _monomial_text(m) -> str:
    parts = []
    for j, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"X{j}")
        elif e > 1:
            parts.append(f"X{j}^{e}")
    return "*".join(parts)


def _term_text(c: GaussianRational, m, first: bool) -> str:
    mono = _monomial_text(m)
    negative = (c.im == 0 and c.re < 0) or (c.re == 0 and c.im < 0)
    if negative:
        c = -c
    if c.is_one() and mono:
        body = mono
    else:
        if c.re and c.im:
            ctext = f"({_qstr(c.re)}{'+' if c.im > 0 else '-'}{_imag_text(abs(c.im))})"
        elif c.im:
            ctext = _imag_text(c.im)
        else:
            ctext = _qstr(c.re)
        body = f"{ctext}*{mono}" if mono else ctext
    if first:
        return ("-" if negative else "") + body
    return (" - " if negative else " + ") + body


def _imag_text(q) -> str:
    if q == 1:
        return "i"
    return f"{_qstr(q)}i"


def format_polynomial(f: Polynomial) -> str:
    if not f.terms:
        return "0"
    items = sorted(f.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)
    return "".join(_term_text(c, m, k == 0) for k, (m, c) in enumerate(items))

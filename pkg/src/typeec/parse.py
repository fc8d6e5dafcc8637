"""Parser for scalar and point expressions over a tower.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' ['-'] INT)?
    atom   := INT | NAME | '(' expr ')'

Names are ``eps``, ``eta``, ``sqrt3``, ``qrt3``, ``cbrt2`` and any generator
of the tower passed in.  A point is three expressions separated by ``:``.
"""

from __future__ import annotations

import re

from .errors import ParseError, UnknownSymbol
from .exactfield import constants, default_tower

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text):
    toks = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(1) is not None:
            toks.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            toks.append(("name", m.group(2), m.start(2)))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", m.start(3))
            toks.append(("op", ch, m.start(3)))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text, symbols, tower):
        self.toks = _tokenize(text)
        self.i = 0
        self.symbols = symbols
        self.tower = tower

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect_op(self, ch):
        kind, val, pos = self.take()
        if kind != "op" or val != ch:
            raise ParseError(f"expected {ch!r}", pos)

    def expr(self):
        acc = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                acc = acc + rhs if val == "+" else acc - rhs
            else:
                return acc

    def term(self):
        acc = self.unary()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                rhs = self.unary()
                if val == "*":
                    acc = acc * rhs
                else:
                    if rhs == 0:
                        raise ParseError("division by zero", pos)
                    acc = acc / rhs
            else:
                return acc

    def unary(self):
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            x = self.unary()
            return -x if val == "-" else x
        return self.power()

    def power(self):
        base = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            sign = 1
            kind, val, pos = self.peek()
            if kind == "op" and val == "-":
                self.take()
                sign = -1
            kind, val, pos = self.take()
            if kind != "int":
                raise ParseError("expected an integer exponent", pos)
            if sign < 0 and base == 0:
                raise ParseError("division by zero", pos)
            return base ** (sign * val)
        return base

    def atom(self):
        kind, val, pos = self.take()
        if kind == "int":
            return self.tower(val)
        if kind == "name":
            if val not in self.symbols:
                raise UnknownSymbol(f"unknown symbol {val!r}", pos)
            return self.symbols[val]
        if kind == "op" and val == "(":
            x = self.expr()
            self.expect_op(")")
            return x
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected {val!r}", pos)


def _symbols(tower, extra=None):
    syms = constants(tower) if "eta" in tower.names else {}
    for name in tower.names:
        syms.setdefault(name, tower.gen(name))
    if extra:
        syms.update({k: tower.join(v.tower).lift(v) if hasattr(v, "tower") else tower(v)
                     for k, v in extra.items()})
    return syms


def parse_scalar(text, tower=None, symbols=None):
    """Parse an expression into an exact element of ``tower`` (default tower).

    ``symbols`` maps extra names to values, e.g. ``{"lam": lam}``.
    """
    tower = tower if tower is not None else default_tower()
    p = _Parser(text, _symbols(tower, symbols), tower)
    if p.peek()[0] == "end":
        raise ParseError("empty expression", 0)
    x = p.expr()
    kind, val, pos = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {val!r}", pos)
    return x


def parse_point(text, tower=None):
    """Parse ``a:b:c`` into a projective point."""
    from .hesse import ProjPoint

    parts = text.split(":")
    if len(parts) != 3:
        raise ParseError("a point needs exactly three ':'-separated coordinates", 0)
    coords = []
    offset = 0
    for part in parts:
        try:
            coords.append(parse_scalar(part, tower))
        except ParseError as exc:
            if exc.pos is None:
                raise
            raise type(exc)(str(exc).rsplit(" at position", 1)[0], exc.pos + offset) from None
        offset += len(part) + 1
    try:
        return ProjPoint(*coords)
    except ValueError as exc:
        raise ParseError(str(exc), 0) from None


# -- noncommutative polynomials in x, y, z -----------------------------------

_VARS = "xyz"


class _NC:
    """A noncommutative polynomial: {word: coefficient}."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = {w: c for w, c in terms.items() if c}

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return _NC(out)

    def __neg__(self):
        return _NC({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out[w] + c1 * c2 if w in out else c1 * c2
        return _NC(out)

    def __truediv__(self, other):
        if set(other.terms) - {""}:
            raise ValueError("can only divide by a scalar")
        s = other.terms.get("")
        if s is None:
            raise ZeroDivisionError
        return _NC({w: c / s for w, c in self.terms.items()})

    def __pow__(self, n):
        if n < 0:
            if set(self.terms) - {""}:
                raise ValueError("negative power of a non-scalar")
            return _NC({"": self.terms[""] ** n})
        acc = _NC({"": 1})
        for _ in range(n):
            acc = acc * self
        return acc



class _NCParser(_Parser):
    """Scalar grammar plus variables x, y, z and implicit multiplication."""

    def __init__(self, text, symbols, tower):
        self.tower = tower
        self.symbols = symbols
        self.toks = []
        for kind, val, pos in _tokenize(text):
            if kind == "name":
                self.toks += self._split(val, pos)
            else:
                self.toks.append((kind, val, pos))
        self.i = 0

    def _split(self, name, pos):
        # longest known symbol first, else a single variable letter
        out = []
        k = 0
        names = sorted(self.symbols, key=len, reverse=True)
        while k < len(name):
            hit = next((s for s in names if name.startswith(s, k)), None)
            if hit is None:
                if name[k] in _VARS:
                    hit = name[k]
                else:
                    raise UnknownSymbol(f"unknown symbol in {name!r}", pos + k)
            out.append(("name", hit, pos + k))
            k += len(hit)
        return out

    def term(self):
        acc = self.unary()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                rhs = self.unary()
                if val == "*":
                    acc = acc * rhs
                else:
                    try:
                        acc = acc / rhs
                    except (ZeroDivisionError, ValueError) as exc:
                        raise ParseError(str(exc) or "division by zero", pos) from None
            elif kind in ("int", "name") or (kind == "op" and val == "("):
                acc = acc * self.power()
            else:
                return acc

    def power(self):
        base = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "int":
                raise ParseError("expected an integer exponent", pos)
            return base**val
        return base

    def atom(self):
        kind, val, pos = self.peek()
        if kind == "name" and val in _VARS and val not in self.symbols:
            self.take()
            return _NC({val: self.tower.one})
        if kind == "int":
            self.take()
            return _NC({"": self.tower(val)})
        if kind == "name":
            self.take()
            if val not in self.symbols:
                raise UnknownSymbol(f"unknown symbol {val!r}", pos)
            return _NC({"": self.symbols[val]})
        if kind == "op" and val == "(":
            self.take()
            x = self.expr()
            self.expect_op(")")
            return x
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected {val!r}", pos)


def parse_nc(text, tower=None, symbols=None):
    """Parse a noncommutative polynomial in x, y, z into {word: coefficient}.

    Juxtaposition multiplies, so ``eta^8 x^2z`` and ``c(xyx+yxy)`` work.
    """
    tower = tower if tower is not None else default_tower()
    p = _NCParser(text, _symbols(tower, symbols), tower)
    if p.peek()[0] == "end":
        raise ParseError("empty expression", 0)
    x = p.expr()
    kind, val, pos = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {val!r}", pos)
    return x.terms


def _homogeneous(terms, n, text):
    bad = [w for w in terms if len(w) != n]
    if bad:
        raise ParseError(f"{text!r}: term {bad[0] or '1'!r} is not of degree {n}", 0)
    return terms


def parse_potential(text, tower=None, symbols=None):
    from .tensor import Tensor3

    terms = _homogeneous(parse_nc(text, tower, symbols), 3, text)
    return Tensor3.from_terms(terms, tower)


def parse_quadratic(text, tower=None, symbols=None):
    from .tensor import Tensor2

    terms = _homogeneous(parse_nc(text, tower, symbols), 2, text)
    return Tensor2.from_terms(terms, tower)

"""Towers of simple algebraic extensions of Q and their elements.

Values are stored nested, one layer per level:

* depth 0 (Q itself): ``Fraction``
* depth 1: kernel pair ``(nums, den)`` for a polynomial in the first
  generator with rational coefficients
* depth >= 2: tuple of depth-(d-1) values, trailing zeros trimmed

Every level is reduced modulo its (monic) defining polynomial, so two values
are equal exactly when their raw representations are equal.  Adjoined
polynomials are trusted to be irreducible; a failed inversion of a nonzero
element raises :class:`ZeroDivisor` (dynamic evaluation).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from math import lcm

from ..errors import DivisionByZero, IncompatibleTowers, ZeroDivisor
from . import kernel

_F0 = Fraction(0)
_F1 = Fraction(1)


class _QArith:
    depth = 0
    zero = _F0
    one = _F1
    degree = 1

    @staticmethod
    def is_zero(a):
        return not a

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def inv(a):
        if not a:
            raise DivisionByZero("division by zero")
        return 1 / a

    @staticmethod
    def from_fraction(q):
        return Fraction(q)

    @staticmethod
    def to_fraction(a):
        return a


class _PolyQArith:
    """Q[t]/(f) on kernel pairs."""

    depth = 1

    def __init__(self, level):
        coeffs = [Fraction(c) for c in level.minpoly]
        fd = lcm(*(c.denominator for c in coeffs))
        self.fn = tuple(int(c * fd) for c in coeffs)
        self.fd = fd
        self.f = coeffs
        self.degree = len(coeffs) - 1
        self.base = _QArith
        self.zero = kernel.ZERO
        self.one = ((1,), 1)

    @staticmethod
    def is_zero(a):
        return not a[0]

    add = staticmethod(kernel.add)
    sub = staticmethod(kernel.sub)
    neg = staticmethod(kernel.neg)

    def mul(self, a, b):
        return kernel.mul(a, b, self.fn, self.fd)

    def from_fraction(self, q):
        q = Fraction(q)
        return kernel.normalize([q.numerator], q.denominator)

    embed = from_fraction

    def coeffs(self, a):
        nums, den = a
        return [Fraction(c, den) for c in nums]

    def from_coeffs(self, cs):
        cs = [Fraction(c) for c in cs]
        if not cs:
            return self.zero
        d = lcm(*(c.denominator for c in cs))
        return kernel.normalize([int(c * d) for c in cs], d)

    def to_fraction(self, a):
        nums, den = a
        if len(nums) > 1:
            return None
        return Fraction(nums[0], den) if nums else _F0

    def inv(self, a):
        if not a[0]:
            raise DivisionByZero("division by zero")
        if len(a[0]) == 1:
            return kernel.normalize([a[1]], a[0][0])
        s = _poly_inverse(self.coeffs(a), self.f, _QArith)
        return self.from_coeffs(s)


class _ExtArith:
    """K[t]/(f) for K an arithmetic of lower depth; values are trimmed tuples."""

    def __init__(self, level, base):
        self.base = base
        self.depth = base.depth + 1
        self.f = tuple(level.minpoly)
        self.degree = len(self.f) - 1
        self.zero = ()
        self.one = (base.one,)
        self._fsparse = [(i, c) for i, c in enumerate(self.f[:-1]) if not base.is_zero(c)]

    @staticmethod
    def is_zero(a):
        return not a

    def _trim(self, out):
        z = self.base.is_zero
        n = len(out)
        while n and z(out[n - 1]):
            n -= 1
        return tuple(out[:n])

    def add(self, a, b):
        if not a:
            return b
        if not b:
            return a
        B = self.base
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = B.add(out[i], c)
        return self._trim(out) if len(a) == len(b) else tuple(out)

    def neg(self, a):
        n = self.base.neg
        return tuple(n(c) for c in a)

    def sub(self, a, b):
        if not b:
            return a
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if not a or not b:
            return ()
        B = self.base
        if len(a) == 1 and len(b) == 1:
            return (B.mul(a[0], b[0]),)
        z = B.is_zero
        out = [B.zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if z(ai):
                continue
            for j, bj in enumerate(b):
                if not z(bj):
                    out[i + j] = B.add(out[i + j], B.mul(ai, bj))
        n = self.degree
        for k in range(len(out) - 1, n - 1, -1):
            c = out[k]
            if z(c):
                continue
            base = k - n
            for i, fi in self._fsparse:
                out[base + i] = B.sub(out[base + i], B.mul(c, fi))
            out[k] = B.zero
        return self._trim(out[:n])

    def from_fraction(self, q):
        v = self.base.from_fraction(q)
        return () if self.base.is_zero(v) else (v,)

    def embed(self, v):
        return () if self.base.is_zero(v) else (v,)

    def coeffs(self, a):
        return list(a)

    def from_coeffs(self, cs):
        return self._trim(list(cs))

    def to_fraction(self, a):
        if len(a) > 1:
            return None
        return self.base.to_fraction(a[0]) if a else _F0

    def inv(self, a):
        if not a:
            raise DivisionByZero("division by zero")
        if len(a) == 1:
            return (self.base.inv(a[0]),)
        return self._trim(_poly_inverse(list(a), list(self.f), self.base))


# -- polynomial helpers over an arithmetic ------------------------------------


def _ptrim(p, A):
    while p and A.is_zero(p[-1]):
        p.pop()
    return p


def _pdivmod(a, b, A):
    a = list(a)
    if len(a) < len(b):
        return [], _ptrim(a, A)
    inv_lc = A.inv(b[-1])
    nb = len(b)
    q = [A.zero] * (len(a) - nb + 1)
    for k in range(len(a) - nb, -1, -1):
        c = A.mul(a[k + nb - 1], inv_lc)
        q[k] = c
        if A.is_zero(c):
            continue
        for i, bi in enumerate(b):
            if not A.is_zero(bi):
                a[k + i] = A.sub(a[k + i], A.mul(c, bi))
    return _ptrim(q, A), _ptrim(a[: nb - 1], A)


def _pmul(a, b, A):
    if not a or not b:
        return []
    out = [A.zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if A.is_zero(ai):
            continue
        for j, bj in enumerate(b):
            out[i + j] = A.add(out[i + j], A.mul(ai, bj))
    return _ptrim(out, A)


def _psub(a, b, A):
    n = max(len(a), len(b))
    out = [A.sub(a[i] if i < len(a) else A.zero, b[i] if i < len(b) else A.zero) for i in range(n)]
    return _ptrim(out, A)


def _poly_inverse(a, f, A):
    """Inverse of ``a`` modulo ``f`` by the extended Euclidean algorithm."""
    r0, r1 = _ptrim(list(f), A), _ptrim(list(a), A)
    s0, s1 = [], [A.one]
    while len(r1) > 1:
        q, r = _pdivmod(r0, r1, A)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1, A), A)
    if not r1:
        raise ZeroDivisor("nonzero element is not invertible; an adjoined polynomial is reducible", factor=r0)
    c = A.inv(r1[0])
    return [A.mul(x, c) for x in s1]


# -- towers ---------------------------------------------------------------------


@dataclass(frozen=True, eq=True)
class TowerLevel:
    """One simple extension: a generator ``name`` with monic ``minpoly``.

    ``minpoly`` holds raw coefficient values (low to high) in the tower made
    of all previous levels.
    """

    name: str
    minpoly: tuple

    @property
    def degree(self):
        return len(self.minpoly) - 1


class Tower:
    """An immutable chain Q < K1 < ... < Kd of simple extensions."""

    __slots__ = ("levels", "_arith", "__dict__")

    def __init__(self, levels=()):
        self.levels = tuple(levels)
        names = [lv.name for lv in self.levels]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in tower: {names}")
        arith = [_QArith]
        for lv in self.levels:
            if lv.degree < 2:
                raise ValueError("an adjoined polynomial must have degree >= 2")
            if len(arith) == 1:
                arith.append(_PolyQArith(lv))
            else:
                arith.append(_ExtArith(lv, arith[-1]))
        self._arith = arith

    @property
    def depth(self):
        return len(self.levels)

    @property
    def arith(self):
        return self._arith[-1]

    def arith_at(self, depth):
        return self._arith[depth]

    @property
    def degree(self):
        d = 1
        for lv in self.levels:
            d *= lv.degree
        return d

    @property
    def names(self):
        return tuple(lv.name for lv in self.levels)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Tower):
            return NotImplemented
        return self.levels == other.levels

    def __hash__(self):
        return hash(self.levels)

    def __repr__(self):
        if not self.levels:
            return "Tower(Q)"
        return "Tower(Q" + "".join(f"({lv.name})" for lv in self.levels) + ")"

    def is_prefix_of(self, other):
        n = len(self.levels)
        return len(other.levels) >= n and (other.levels[:n] == self.levels)

    def join(self, other):
        if self is other or self == other:
            return self
        if self.is_prefix_of(other):
            return other
        if other.is_prefix_of(self):
            return self
        raise IncompatibleTowers(f"{self!r} and {other!r} are not nested")

    def prefix(self, depth):
        return Tower(self.levels[:depth])

    # -- constructors ------------------------------------------------------

    def element(self, v):
        return FieldElement(self, v)

    def __call__(self, x):
        """Coerce an int, Fraction or FieldElement of a sub-tower."""
        if isinstance(x, FieldElement):
            return self.lift(x)
        return FieldElement(self, self.raw_rational(x))

    def raw_rational(self, q):
        return self.arith.from_fraction(q)

    @property
    def zero(self):
        return FieldElement(self, self.arith.zero)

    @property
    def one(self):
        return FieldElement(self, self.arith.one)

    def gen(self, name):
        """The generator called ``name``, as an element of this tower."""
        for d, lv in enumerate(self.levels, start=1):
            if lv.name == name:
                A = self._arith[d]
                v = A.from_coeffs([A.base.zero, A.base.one])
                return self.lift(FieldElement(self.prefix(d), v))
        raise KeyError(name)

    def lift(self, x):
        """Embed an element of a prefix of this tower."""
        if x.tower is self or x.tower == self:
            return x if x.tower is self else FieldElement(self, x.v)
        if not x.tower.is_prefix_of(self):
            raise IncompatibleTowers(f"cannot lift {x.tower!r} into {self!r}")
        v = x.v
        for d in range(x.tower.depth + 1, self.depth + 1):
            v = self._arith[d].embed(v)
        return FieldElement(self, v)

    def from_coeffs(self, coeffs):
        """Element ``sum coeffs[i] * g**i`` where g is the top generator."""
        if not self.levels:
            (c,) = coeffs
            return FieldElement(self, Fraction(c))
        below = self.prefix(self.depth - 1)
        raws = [below(c).v for c in coeffs]
        return FieldElement(self, self.arith.from_coeffs(raws))

    @cached_property
    def basis_monomials(self):
        """Exponent vectors of the power basis, innermost generator first."""
        return list(product(*(range(lv.degree) for lv in self.levels)))

    def monomial(self, exps):
        x = self.one
        for name, e in zip(self.names, exps):
            if e:
                x = x * self.gen(name) ** e
        return x


def adjoin_root(tower, poly, name):
    """Adjoin a root of the monic polynomial ``poly`` (coefficients low to high).

    The result is a new tower whose top generator ``name`` satisfies ``poly``.
    Irreducibility is not checked: if ``poly`` factors, some later inversion
    raises :class:`ZeroDivisor`.
    """
    cs = [tower(c) for c in poly]
    if len(cs) < 3:
        raise ValueError("degree must be at least 2")
    if cs[-1] != 1:
        raise ValueError("polynomial must be monic")
    return Tower(tower.levels + (TowerLevel(name, tuple(c.v for c in cs)),))


# -- elements -------------------------------------------------------------------


def _minimal(depth, v, arith):
    """Descend to the lowest level that contains the value."""
    while depth > 0:
        A = arith[depth]
        if depth == 1:
            nums, den = v
            if len(nums) > 1:
                break
            v = Fraction(nums[0], den) if nums else _F0
        else:
            if len(v) > 1:
                break
            v = v[0] if v else A.base.zero
        depth -= 1
    return depth, v


class FieldElement:
    """Exact element of a tower.  Immutable."""

    __slots__ = ("tower", "v")

    def __init__(self, tower, v):
        self.tower = tower
        self.v = v

    # -- coercion ----------------------------------------------------------

    def _pair(self, other):
        if isinstance(other, FieldElement):
            t = self.tower
            if other.tower is t or other.tower == t:
                return t, self.v, other.v
            t = t.join(other.tower)
            return t, t.lift(self).v, t.lift(other).v
        if isinstance(other, (int, Fraction)):
            return self.tower, self.v, self.tower.raw_rational(other)
        return None

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        t, a, b = p
        return FieldElement(t, t.arith.add(a, b))

    __radd__ = __add__

    def __sub__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        t, a, b = p
        return FieldElement(t, t.arith.sub(a, b))

    def __rsub__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        t, a, b = p
        return FieldElement(t, t.arith.sub(b, a))

    def __mul__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        t, a, b = p
        return FieldElement(t, t.arith.mul(a, b))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.tower, self.tower.arith.neg(self.v))

    def __pos__(self):
        return self

    def inverse(self):
        return FieldElement(self.tower, self.tower.arith.inv(self.v))

    def __truediv__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        t, a, b = p
        A = t.arith
        return FieldElement(t, A.mul(a, A.inv(b)))

    def __rtruediv__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        t, a, b = p
        A = t.arith
        return FieldElement(t, A.mul(b, A.inv(a)))

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        A = self.tower.arith
        base = self.v
        if n < 0:
            base = A.inv(base)
            n = -n
        acc = A.one
        while n:
            if n & 1:
                acc = A.mul(acc, base)
            n >>= 1
            if n:
                base = A.mul(base, base)
        return FieldElement(self.tower, acc)

    # -- comparison --------------------------------------------------------

    def is_zero(self):
        return self.tower.arith.is_zero(self.v)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        _, a, b = p
        return a == b

    def __hash__(self):
        d, v = _minimal(self.tower.depth, self.v, self.tower._arith)
        if d == 0:
            return hash(v)
        return hash((self.tower.levels[:d], v))

    # -- inspection --------------------------------------------------------

    def is_rational(self):
        return _minimal(self.tower.depth, self.v, self.tower._arith)[0] == 0

    def to_fraction(self):
        d, v = _minimal(self.tower.depth, self.v, self.tower._arith)
        if d:
            raise ValueError(f"{self} is not rational")
        return v

    def coeffs(self):
        """Coefficients over the previous level, as elements of the sub-tower."""
        t = self.tower
        if not t.levels:
            return [self]
        below = t.prefix(t.depth - 1)
        cs = t.arith.coeffs(self.v)
        cs = cs + [below.arith.zero] * (t.levels[-1].degree - len(cs))
        return [FieldElement(below, c) for c in cs]

    def terms(self):
        """Nonzero ``(exponents, Fraction)`` pairs in the power basis."""
        return sorted(_terms(self.tower.depth, self.v, self.tower._arith))

    def __str__(self):
        from .printing import format_element

        return format_element(self)

    def __repr__(self):
        return f"FieldElement({self})"


def _terms(depth, v, arith):
    if depth == 0:
        return [((), v)] if v else []
    A = arith[depth]
    out = []
    for i, c in enumerate(A.coeffs(v)):
        for e, q in _terms(depth - 1, c, arith):
            out.append((e + (i,), q))
    return out


QQ = Tower(())

"""Tensors in V^{⊗2} and V^{⊗3} for V = span(x, y, z).

Coefficients are indexed by base-3 digits (i, j, k) with x=0, y=1, z=2, so
``xyz`` is index 0*9 + 1*3 + 2 = 5.  A LinMap acts on basis vectors by
x_j -> sum_i m[i][j] x_i, i.e. on coordinate columns, the same convention as
:class:`typeec.hesse.CurveAuto`.
"""

from __future__ import annotations

from itertools import product

from .errors import DependentDerivatives, SingularMap
from .exactfield import FieldElement, default_tower
from .exactfield.linalg import ExactMatrix

VARS = "xyz"


def _tower_of(values, tower=None):
    t = tower if tower is not None else default_tower()
    for v in values:
        if isinstance(v, FieldElement):
            t = t.join(v.tower)
    return t


def word(idx, n):
    """Monomial string of a flat index, e.g. word(5, 3) == 'xyz'."""
    out = []
    for _ in range(n):
        idx, r = divmod(idx, 3)
        out.append(VARS[r])
    return "".join(reversed(out))


def index(w):
    i = 0
    for ch in w:
        i = 3 * i + VARS.index(ch)
    return i


def pretty_word(w):
    """'xxz' -> 'x^2z'."""
    out = []
    k = 0
    while k < len(w):
        n = 1
        while k + n < len(w) and w[k + n] == w[k]:
            n += 1
        out.append(w[k] if n == 1 else f"{w[k]}^{n}")
        k += n
    return "".join(out)


class _TensorN:
    N = 0

    def __init__(self, coeffs, tower=None):
        coeffs = list(coeffs)
        if len(coeffs) != 3**self.N:
            raise ValueError(f"expected {3 ** self.N} coefficients")
        t = _tower_of(coeffs, tower)
        self.tower = t
        self.coeffs = tuple(c if isinstance(c, FieldElement) and c.tower is t else t(c) for c in coeffs)

    @classmethod
    def zero(cls, tower=None):
        return cls([0] * 3**cls.N, tower)

    @classmethod
    def from_terms(cls, terms, tower=None):
        """Build from a mapping or pairs of (monomial string, coefficient)."""
        items = terms.items() if isinstance(terms, dict) else terms
        cs = [0] * 3**cls.N
        for w, c in items:
            if len(w) != cls.N:
                raise ValueError(f"{w!r} is not a word of length {cls.N}")
            cs[index(w)] = cs[index(w)] + c
        return cls(cs, tower)

    def __getitem__(self, w):
        return self.coeffs[index(w) if isinstance(w, str) else w]

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        return type(self)([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return type(self)([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return type(self)([-a for a in self.coeffs], self.tower)

    def scale(self, s):
        return type(self)([s * a for a in self.coeffs])

    def __rmul__(self, s):
        return self.scale(s)

    def is_zero(self):
        return not any(self.coeffs)

    def terms(self):
        """Nonzero (monomial string, coefficient) pairs in index order."""
        return [(word(i, self.N), c) for i, c in enumerate(self.coeffs) if c]

    def to_pairs(self):
        return [[w, str(c)] for w, c in self.terms()]

    @classmethod
    def from_pairs(cls, pairs, tower=None):
        from .parse import parse_scalar

        return cls.from_terms([(w, parse_scalar(c, tower)) for w, c in pairs], tower)

    def __str__(self):
        parts = []
        for w, c in self.terms():
            m = pretty_word(w)
            if c == 1:
                s = m
            elif c == -1:
                s = "-" + m
            else:
                cs = str(c)
                s = f"({cs})*{m}" if " " in cs else f"{cs}*{m}"
            parts.append(s)
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"{type(self).__name__}({self})"


class Tensor2(_TensorN):
    N = 2


class Tensor3(_TensorN):
    N = 3


class LinMap:
    """An element of End(V), given by its matrix on coordinate columns."""

    def __init__(self, matrix):
        if not isinstance(matrix, ExactMatrix):
            matrix = ExactMatrix(matrix, 3)
        if matrix.shape != (3, 3):
            raise ValueError("a LinMap is 3x3")
        self.matrix = matrix

    @classmethod
    def identity(cls):
        return cls(ExactMatrix.identity(3))

    @classmethod
    def diag(cls, a, b, c):
        return cls([[a, 0, 0], [0, b, 0], [0, 0, c]])

    @classmethod
    def of(cls, auto, i=1):
        """tau^i of a curve automorphism as a map on V."""
        return cls(auto.power(i))

    def __getitem__(self, ij):
        return self.matrix[ij]

    def __matmul__(self, other):
        return LinMap(self.matrix @ other.matrix)

    def __pow__(self, n):
        acc = LinMap.identity()
        base = self if n >= 0 else self.inverse()
        for _ in range(abs(n)):
            acc = acc @ base
        return acc

    def __eq__(self, other):
        return isinstance(other, LinMap) and self.matrix == other.matrix

    def det(self):
        return self.matrix.det()

    def is_invertible(self):
        return bool(self.det())

    def inverse(self):
        if not self.is_invertible():
            raise SingularMap("map is not invertible")
        return LinMap(self.matrix.inverse())

    def __repr__(self):
        return f"LinMap({self.matrix!r})"


def _mode(coeffs, m, slot, n):
    """Apply the matrix ``m`` to tensor slot ``slot`` (0-based) of an n-tensor."""
    rows = m.matrix.rows
    stride = 3 ** (n - 1 - slot)
    out = [0] * len(coeffs)
    for idx, c in enumerate(coeffs):
        if not c:
            continue
        j = (idx // stride) % 3
        base = idx - j * stride
        for i in range(3):
            mij = rows[i][j]
            if mij:
                out[base + i * stride] = out[base + i * stride] + mij * c
    return out


def apply_slots(w, maps):
    """(m_1 ⊗ ... ⊗ m_n)(w); ``None`` entries mean identity."""
    cs = list(w.coeffs)
    for slot, m in enumerate(maps):
        if m is not None:
            cs = _mode(cs, m, slot, w.N)
    return type(w)(cs, w.tower)


def left_deriv(w, i):
    """The w_i with w = sum_i x_i ⊗ w_i."""
    return Tensor2(w.coeffs[9 * i: 9 * i + 9], w.tower)


def right_deriv(w, i):
    """The w'_i with w = sum_i w'_i ⊗ x_i."""
    return Tensor2(w.coeffs[i::3], w.tower)


def cyclic(w):
    """v1 v2 v3 -> v3 v1 v2."""
    cs = [None] * 27
    for a, b, c in product(range(3), repeat=3):
        cs[9 * a + 3 * b + c] = w.coeffs[9 * b + 3 * c + a]
    return Tensor3(cs, w.tower)


def is_superpotential(w):
    return cyclic(w) == w


def tsp_witness(w):
    """The Q with (w)∂_i = sum_j Q[i][j] ∂_j(w), or None.

    Requires the three left derivatives to be linearly independent; the
    witness is returned only when Q exists and is invertible.
    """
    lefts = [left_deriv(w, j).coeffs for j in range(3)]
    cols = [list(r) for r in zip(*lefts)]
    if ExactMatrix(cols, 3).rank() < 3:
        raise DependentDerivatives("left derivatives are linearly dependent")
    q = []
    for i in range(3):
        r = right_deriv(w, i).coeffs
        ker = ExactMatrix([row + [-x] for row, x in zip(cols, r)], 4).nullspace()
        if len(ker) != 1 or not ker[0][3]:
            return None
        v = ker[0]
        q.append([v[j] / v[3] for j in range(3)])
    Q = LinMap(q)
    return Q if Q.is_invertible() else None


def ms_twist(w, t):
    """(t^2 ⊗ t ⊗ id)(w)."""
    if not t.is_invertible():
        raise SingularMap("twisting map is not invertible")
    return apply_slots(w, [t @ t, t, None])


def aut_scalar(w, t):
    """The scalar s with (t⊗t⊗t)(w) = s*w, or None if there is none."""
    if not t.is_invertible():
        raise SingularMap("map is not invertible")
    if w.is_zero():
        raise ValueError("the zero tensor has no scalar")
    img = apply_slots(w, [t, t, t])
    k = next(i for i, c in enumerate(w.coeffs) if c)
    s = img.coeffs[k] / w.coeffs[k]
    if img == w.scale(s):
        return s
    return None


def sklyanin(p):
    """a(xyz+yzx+zxy) + b(xzy+yxz+zyx) + c(x^3+y^3+z^3) for p = (a:b:c)."""
    a, b, c = p.coords
    terms = {}
    for m in ("xyz", "yzx", "zxy"):
        terms[m] = a
    for m in ("xzy", "yxz", "zyx"):
        terms[m] = b
    for m in ("xxx", "yyy", "zzz"):
        terms[m] = c
    return Tensor3.from_terms(terms, p.tower)

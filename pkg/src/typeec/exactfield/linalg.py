"""Dense exact linear algebra over a tower.

Entries are brought into one common tower and elimination runs directly on
raw values through that tower's arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import DivisionByZero
from .tower import QQ, FieldElement


def _common_tower(rows):
    t = QQ
    for row in rows:
        for x in row:
            if isinstance(x, FieldElement) and x.tower is not t:
                t = t.join(x.tower)
    return t


def _raw_rows(rows, t):
    out = []
    for row in rows:
        r = []
        for x in row:
            if isinstance(x, FieldElement):
                r.append(t.lift(x).v)
            else:
                r.append(t.raw_rational(x))
        out.append(r)
    return out


def _rref_raw(rows, ncols, A, reduced=True):
    """In-place Gauss-Jordan elimination; returns (nonzero rows, pivots)."""
    z = A.is_zero
    n = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == n:
            break
        piv = None
        for i in range(r, n):
            x = rows[i][c]
            if not z(x):
                # prefer pivots already in the base field: cheap to invert
                if piv is None or _simpler(x, rows[piv][c]):
                    piv = i
                    if _is_unit(x, A):
                        break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = A.inv(prow[c])
        prow = [x if z(x) else A.mul(x, inv) for x in prow]
        rows[r] = prow
        nz = [(j, y) for j, y in enumerate(prow) if not z(y) and j > c]
        start = 0 if reduced else r + 1
        for i in range(start, n):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if z(f):
                continue
            row = list(row)
            row[c] = A.zero
            for j, y in nz:
                row[j] = A.sub(row[j], A.mul(f, y))
            rows[i] = row
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def _size(x):
    if isinstance(x, tuple) and len(x) == 2 and isinstance(x[1], int):
        return len(x[0])
    if isinstance(x, tuple):
        return sum(_size(c) for c in x) + len(x)
    return 1


def _simpler(x, y):
    return _size(x) < _size(y)


def _is_unit(x, A):
    return x == A.one or x == A.neg(A.one)


class ExactMatrix:
    """A rows x cols grid of tower elements."""

    def __init__(self, rows, ncols=None):
        self.rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        self.ncols = ncols
        if any(len(r) != ncols for r in self.rows):
            raise ValueError("ragged matrix")
        t = self.tower = _common_tower(self.rows)
        self.rows = [[x if isinstance(x, FieldElement) and x.tower is t else t(x) for x in r]
                     for r in self.rows]

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def _wrap(self, raw):
        t = self.tower
        return [[FieldElement(t, v) for v in r] for r in raw]

    def rref(self):
        """Reduced row echelon form (pivot entries 1) and pivot columns."""
        raw = _raw_rows(self.rows, self.tower)
        red, piv = _rref_raw(raw, self.ncols, self.tower.arith)
        return ExactMatrix(self._wrap(red), self.ncols), piv

    def rank(self):
        raw = _raw_rows(self.rows, self.tower)
        red, _ = _rref_raw(raw, self.ncols, self.tower.arith, reduced=False)
        return len(red)

    def nullspace(self):
        """Canonical basis of ``{v : M v = 0}``, in reduced echelon form."""
        t = self.tower
        A = t.arith
        raw = _raw_rows(self.rows, t)
        red, piv = _rref_raw(raw, self.ncols, A)
        free = [c for c in range(self.ncols) if c not in set(piv)]
        vecs = []
        for f in free:
            v = [A.zero] * self.ncols
            v[f] = A.one
            for row, p in zip(red, piv):
                v[p] = A.neg(row[f])
            vecs.append(v)
        if not vecs:
            return []
        canon, _ = _rref_raw(vecs, self.ncols, A)
        return [[FieldElement(t, x) for x in v] for v in canon]

    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            cols = list(zip(*other.rows))
            return ExactMatrix([[_dot(r, c) for c in cols] for r in self.rows], other.ncols)
        return [_dot(r, other) for r in self.rows]

    def transpose(self):
        return ExactMatrix([list(c) for c in zip(*self.rows)], self.nrows)

    def det(self):
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        t = self.tower
        A = t.arith
        rows = _raw_rows(self.rows, t)
        n = self.nrows
        d = A.one
        for c in range(n):
            piv = next((i for i in range(c, n) if not A.is_zero(rows[i][c])), None)
            if piv is None:
                return t.zero
            if piv != c:
                rows[c], rows[piv] = rows[piv], rows[c]
                d = A.neg(d)
            d = A.mul(d, rows[c][c])
            inv = A.inv(rows[c][c])
            for i in range(c + 1, n):
                f = rows[i][c]
                if A.is_zero(f):
                    continue
                f = A.mul(f, inv)
                rows[i] = [A.sub(x, A.mul(f, y)) for x, y in zip(rows[i], rows[c])]
        return FieldElement(t, d)

    def inverse(self):
        n = self.nrows
        if n != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(self.rows)]
        red, piv = ExactMatrix(aug, 2 * n).rref()
        if piv[:n] != list(range(n)):
            raise DivisionByZero("singular matrix")
        return ExactMatrix([r[n:] for r in red.rows], n)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix) or self.shape != other.shape:
            return NotImplemented
        return all(a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s))

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self.rows)
        return f"ExactMatrix([{body}])"

    @classmethod
    def identity(cls, n):
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)], n)


def _dot(r, c):
    acc = 0
    for a, b in zip(r, c):
        acc = acc + a * b
    return acc


def nullspace(m):
    if not isinstance(m, ExactMatrix):
        m = ExactMatrix(m)
    return m.nullspace()


def rank(m):
    if not isinstance(m, ExactMatrix):
        m = ExactMatrix(m)
    return m.rank()


def canonical_basis(vectors, ncols=None):
    """Reduced echelon basis of the span of ``vectors`` (first entry 1)."""
    vectors = list(vectors)
    if not vectors:
        return []
    red, _ = ExactMatrix(vectors, ncols).rref()
    return red.rows


def intersect(u, w, ncols):
    """Canonical basis of span(u) ∩ span(w)."""
    if not u or not w:
        return []
    cols = [list(x) for x in zip(*(list(u) + [[-y for y in v] for v in w]))]
    ker = ExactMatrix(cols, len(u) + len(w)).nullspace()
    vecs = []
    for k in ker:
        vec = [0] * ncols
        for a, ui in zip(k[: len(u)], u):
            if a:
                vec = [x + a * y for x, y in zip(vec, ui)]
        vecs.append(vec)
    return canonical_basis(vecs, ncols)

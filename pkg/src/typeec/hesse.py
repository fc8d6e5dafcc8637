"""Elliptic curves in Hesse form x^3 + y^3 + z^3 - 3*lam*xyz.

The group law has neutral element o = (1:-1:0) and -(a:b:c) = (b:a:c).
Besides the involution tau1 (all curves) there are the extra automorphisms
tau2 (lam = 0, order 6) and tau3 (lam = 1 + sqrt3, order 4).  For each
curve the automorphism ``curve.auto`` is the one generating the group of
automorphisms fixing o.
"""

from __future__ import annotations

from functools import cached_property

from .errors import DegenerateAddition
from .exactfield import FieldElement, constants, default_tower, find_roots
from .exactfield.linalg import ExactMatrix


def _coerce(x, tower):
    if isinstance(x, FieldElement):
        return x if x.tower is tower else tower.join(x.tower).lift(x)
    return tower(x)


class ProjPoint:
    """A point of P^2, scaled so its first nonzero coordinate is 1."""

    __slots__ = ("coords", "tower")

    def __init__(self, a, b, c, tower=None):
        t = tower if tower is not None else default_tower()
        for x in (a, b, c):
            if isinstance(x, FieldElement):
                t = t.join(x.tower)
        coords = [_coerce(x, t) for x in (a, b, c)]
        lead = next((x for x in coords if x), None)
        if lead is None:
            raise ValueError("(0:0:0) is not a projective point")
        if lead != 1:
            inv = lead.inverse()
            coords = [x * inv for x in coords]
        self.coords = tuple(coords)
        self.tower = t

    @classmethod
    def parse(cls, text, tower=None):
        from .parse import parse_point

        return parse_point(text, tower)

    def lift(self, tower):
        if tower == self.tower:
            return self
        return ProjPoint(*self.coords, tower=tower)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __str__(self):
        return "(" + " : ".join(str(x) for x in self.coords) + ")"

    def __repr__(self):
        return f"ProjPoint{self}"

    def to_json(self):
        return [str(x) for x in self.coords]


class CurveAuto:
    """tau1, tau2 or tau3 acting on points by a 3x3 matrix on coordinate columns."""

    ORDERS = {"tau1": 2, "tau2": 6, "tau3": 4}

    def __init__(self, kind, tower):
        if kind not in self.ORDERS:
            raise ValueError(f"unknown automorphism {kind!r}")
        k = constants(tower)
        eps = k["eps"]
        one, zero = tower.one, tower.zero
        if kind == "tau1":
            rows = [[zero, one, zero], [one, zero, zero], [zero, zero, one]]
        elif kind == "tau2":
            rows = [[zero, one, zero], [one, zero, zero], [zero, zero, eps]]
        else:
            e2 = eps * eps
            rows = [[e2, eps, one], [eps, e2, one], [one, one, one]]
        self.kind = kind
        self.order = self.ORDERS[kind]
        self.matrix = ExactMatrix(rows, 3)
        self._powers = [ExactMatrix.identity(3)]

    def power(self, i):
        """Matrix of tau^i (i taken mod the order)."""
        i %= self.order
        while len(self._powers) <= i:
            self._powers.append(self.matrix @ self._powers[-1])
        return self._powers[i]

    def apply(self, p, i=1):
        m = self.power(i)
        return ProjPoint(*(m @ list(p.coords)), tower=p.tower)

    def __repr__(self):
        return f"CurveAuto({self.kind})"


class CurveSubset:
    """Either all of E, or a finite set of points listed in a fixed order."""

    def __init__(self, points=(), entire=False):
        self.entire = entire
        seen = {}
        for p in points:
            seen.setdefault(p, None)
        self.points = () if entire else tuple(seen)
        self._set = frozenset(self.points)

    @classmethod
    def all(cls):
        return cls(entire=True)

    def __len__(self):
        if self.entire:
            raise TypeError("the whole curve is infinite")
        return len(self.points)

    def __iter__(self):
        if self.entire:
            raise TypeError("cannot enumerate the whole curve")
        return iter(self.points)

    def __contains__(self, p):
        return self.entire or p in self._set

    def __eq__(self, other):
        if not isinstance(other, CurveSubset):
            return NotImplemented
        return self.entire == other.entire and self._set == other._set

    def __repr__(self):
        if self.entire:
            return "CurveSubset(E)"
        return f"CurveSubset({len(self.points)} points)"

    def to_json(self):
        if self.entire:
            return "E"
        return [p.to_json() for p in self.points]


class HesseCurve:
    """The cubic x^3 + y^3 + z^3 - 3*lam*xyz with lam^3 != 1.

    Coordinates live in ``self.tower``: the default tower, extended by
    whatever is needed to write down the 2-torsion points.
    """

    def __init__(self, lam, tower=None):
        base = tower if tower is not None else default_tower()
        if isinstance(lam, str):
            from .parse import parse_scalar

            lam = parse_scalar(lam, base)
        lam = _coerce(lam, base)
        if lam**3 == 1:
            raise ValueError("lambda^3 = 1 gives a singular cubic")
        base = lam.tower
        k = constants(base)
        self._sqrt3 = k["sqrt3"]
        self._eps = k["eps"]
        # 2-torsion: (1:1:c) with c^3 - 3 lam c + 2 = 0
        roots, t = find_roots(base, [2, -3 * lam, 0, 1], candidates=(lam, -lam))
        self.tower = t
        self.lam = t.lift(lam)
        self._e2_roots = [t.lift(r) for r in roots]
        self.o = self.point(1, -1, 0)
        if lam == 0:
            self.auto = CurveAuto("tau2", t)
        elif lam == 1 + self._sqrt3:
            self.auto = CurveAuto("tau3", t)
        else:
            self.auto = CurveAuto("tau1", t)
        self.tau1 = self.auto if self.auto.kind == "tau1" else CurveAuto("tau1", t)

    def __repr__(self):
        return f"HesseCurve(lambda={self.lam})"

    def __eq__(self, other):
        return isinstance(other, HesseCurve) and self.lam == other.lam

    def __hash__(self):
        return hash(self.lam)

    @property
    def special(self):
        """'j=0', 'j=1728' for the two fixed representatives, else 'generic'."""
        return {"tau2": "j=0", "tau3": "j=1728", "tau1": "generic"}[self.auto.kind]

    def point(self, a, b, c):
        return ProjPoint(a, b, c, tower=self.tower)

    def lift(self, p):
        return p.lift(self.tower.join(p.tower))

    def g(self, a, b, c):
        return a**3 + b**3 + c**3 - 3 * self.lam * a * b * c

    def contains(self, p):
        return self.g(*p.coords) == 0

    def j_invariant(self):
        l3 = self.lam**3
        return 27 * l3 * (l3 + 8) ** 3 / (l3 - 1) ** 3

    # -- group law ------------------------------------------------------------

    @staticmethod
    def branches(p, q):
        """The two raw addition formulas (unnormalized triples)."""
        a, b, c = p.coords
        al, be, ga = q.coords
        one = (a * c * be * be - b * b * al * ga,
               b * c * al * al - a * a * be * ga,
               a * b * ga * ga - c * c * al * be)
        two = (a * b * al * al - c * c * be * ga,
               a * c * ga * ga - b * b * al * be,
               b * c * be * be - a * a * al * ga)
        return one, two

    def add(self, p, q):
        for raw in self.branches(p, q):
            if any(raw):
                return ProjPoint(*raw, tower=self.tower)
        raise DegenerateAddition(f"both addition formulas vanish at {p}, {q}")

    def neg(self, p):
        a, b, c = p.coords
        return ProjPoint(b, a, c, tower=self.tower)

    def sub(self, p, q):
        return self.add(p, self.neg(q))

    def scalar_mul(self, n, p):
        if n < 0:
            return self.scalar_mul(-n, self.neg(p))
        acc = self.o
        base = p
        while n:
            if n & 1:
                acc = self.add(acc, base)
            n >>= 1
            if n:
                base = self.add(base, base)
        return acc

    # -- torsion --------------------------------------------------------------

    @cached_property
    def _e3(self):
        e = self._eps
        pts = []
        for i in range(3):
            w = -(e**i)
            pts += [self.point(1, w, 0), self.point(0, 1, w), self.point(1, 0, w)]
        return CurveSubset(pts)

    @cached_property
    def _e2(self):
        return CurveSubset([self.o] + [self.point(1, 1, c) for c in self._e2_roots])

    @cached_property
    def _e6(self):
        return CurveSubset(self.add(p, r) for p in self._e2 for r in self._e3)

    def torsion(self, n):
        if n == 2:
            return self._e2
        if n == 3:
            return self._e3
        if n == 6:
            return self._e6
        raise ValueError("only n in {2, 3, 6} is supported")

    def subgroup(self, gen):
        """The cyclic subgroup generated by a torsion point."""
        pts = [self.o]
        p = gen
        while p != self.o:
            pts.append(p)
            p = self.add(p, gen)
        return CurveSubset(pts)

    # -- loci attached to tau^i ----------------------------------------------

    def _check_exponent(self, t, i):
        if not 0 <= i < t.order:
            raise ValueError(f"exponent must lie in 0..{t.order - 1}")

    def fixed_locus(self, t, i):
        """{p : tau^i(p) = p}, in closed form."""
        self._check_exponent(t, i)
        if i == 0:
            return CurveSubset.all()
        if 2 * i == t.order:
            return self._e2
        if t.kind == "tau2":
            if i in (1, 5):
                return CurveSubset([self.o])
            return self.subgroup(self.point(1, -self._eps, 0))
        # tau3, i = 1 or 3
        return CurveSubset([self.o, self.point(1, 1, self.lam)])

    def u_lower(self, t, i):
        """{p : p - tau^i(p) in E[3]}, equivalently {p : 3p fixed by tau^i}."""
        self._check_exponent(t, i)
        if i == 0:
            return CurveSubset.all()
        fixed = self.fixed_locus(t, i)
        if fixed == self._e2:
            return self._e6
        if len(fixed) == 1:
            return self._e3
        if t.kind == "tau2":
            q = self.special_point()
            extra = [self.add(t.apply(q, l), r) for l in range(6) for r in fixed]
            return CurveSubset(list(self._e3) + extra)
        # tau3: <(1:1:lam)> + E[3]
        return CurveSubset(self.add(f, r) for f in fixed for r in self._e3)

    def u_upper(self, t, i):
        """{r - tau^i(r) : r in E[3]}, straight from the definition."""
        self._check_exponent(t, i)
        return CurveSubset(self.sub(r, t.apply(r, i)) for r in self._e3)

    def u_upper_closed(self, t, i):
        """Closed form of :meth:`u_upper`."""
        self._check_exponent(t, i)
        if i == 0:
            return CurveSubset([self.o])
        if t.kind == "tau2" and i in (2, 4):
            return self.subgroup(self.point(1, -self._eps, 0))
        return self._e3

    def special_point(self):
        """(eta^8 : eta^4 : 1), a 9-torsion point on the lam = 0 curve."""
        eta = constants(self.tower)["eta"]
        return self.point(eta**8, eta**4, 1)

    # -- brute-force counterparts (used for cross-checks) -------------------

    def fixed_points_in(self, points, t, i):
        return CurveSubset(p for p in points if t.apply(p, i) == p)

    def in_u_lower(self, p, t, i):
        """Definition check: p - tau^i(p) lies in E[3]."""
        return self.sub(p, t.apply(p, i)) in self._e3

    def triple_fixed(self, p, t, i):
        """tau^i(3p) = 3p."""
        p3 = self.scalar_mul(3, p)
        return t.apply(p3, i) == p3

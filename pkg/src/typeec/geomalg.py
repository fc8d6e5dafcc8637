"""Geometric pairs (E, sigma_p tau^i) and their quadratic algebras.

A pair is a curve, a translation point p and an exponent i; sigma sends q
to tau^i(q) + p.  Its relation space is the set of f in V⊗V vanishing on
all (q, sigma(q)), computed symbolically: f(q, S(q)) must be a multiple of
the Hesse cubic g, where S is one of the two addition formulas composed
with tau^i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import FiberNotPoint, UnexpectedDimension
from .exactfield.linalg import ExactMatrix, canonical_basis, intersect
from .hesse import CurveAuto, HesseCurve, ProjPoint
from .tensor import LinMap, Tensor2, aut_scalar, left_deriv, sklyanin

# -- tiny commutative polynomials in (alpha, beta, gamma) --------------------


def _padd(f, g):
    out = dict(f)
    for e, c in g.items():
        out[e] = out[e] + c if e in out else c
    return {e: c for e, c in out.items() if c}


def _pmul(f, g):
    out = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
            out[e] = out[e] + c1 * c2 if e in out else c1 * c2
    return {e: c for e, c in out.items() if c}


def _pscale(f, s):
    return {e: c * s for e, c in f.items() if c * s}


_UNIT = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
_CUBICS = [e for e in product(range(4), repeat=3) if sum(e) == 3]


# -- data types ----------------------------------------------------------------


@dataclass(frozen=True)
class PairDescriptor:
    """sigma = sigma_p tau^i on ``curve``; ``auto`` defaults to the curve's own."""

    curve: HesseCurve
    p: ProjPoint
    i: int
    auto: CurveAuto = field(default=None, compare=False)

    def __post_init__(self):
        c = self.curve
        if self.auto is None:
            object.__setattr__(self, "auto", c.auto)
        object.__setattr__(self, "p", c.lift(self.p))
        object.__setattr__(self, "i", self.i % self.auto.order)
        if not c.contains(self.p):
            raise ValueError(f"{self.p} is not on the curve")

    def sigma(self, q):
        c = self.curve
        return c.add(self.auto.apply(c.lift(q), self.i), self.p)


class RelationSpace:
    """A subspace of V⊗V kept as a reduced echelon basis."""

    def __init__(self, vectors):
        vecs = [list(v.coeffs) if isinstance(v, Tensor2) else list(v) for v in vectors]
        basis = canonical_basis(vecs, 9) if vecs else []
        self.basis = [Tensor2(b) for b in basis]

    @property
    def dim(self):
        return len(self.basis)

    def vectors(self):
        return [list(b.coeffs) for b in self.basis]

    def __eq__(self, other):
        if not isinstance(other, RelationSpace):
            return NotImplemented
        return self.dim == other.dim and all(a == b for a, b in zip(self.basis, other.basis))

    def __contains__(self, f):
        return RelationSpace(self.vectors() + [list(f.coeffs)]).dim == self.dim

    def __repr__(self):
        return "RelationSpace(" + "; ".join(str(b) for b in self.basis) + ")"

    def to_json(self):
        return [b.to_pairs() for b in self.basis]


# -- relation extraction -------------------------------------------------------


def sigma_as_quadratic(d, branch):
    """Quadratic forms (S1, S2, S3) with sigma(q) = (S1(q):S2(q):S3(q)).

    Each form is a dict {exponent triple: coefficient} in (alpha, beta, gamma).
    """
    m = d.auto.power(d.i)
    lin = [{_UNIT[j]: m[k, j] for j in range(3) if m[k, j]} for k in range(3)]
    al, be, ga = lin
    a, b, c = d.p.coords

    def term(s, u, v):
        return _pscale(_pmul(u, v), s)

    if branch == 1:
        s1 = _padd(term(a * c, be, be), term(-b * b, al, ga))
        s2 = _padd(term(b * c, al, al), term(-a * a, be, ga))
        s3 = _padd(term(a * b, ga, ga), term(-c * c, al, be))
    elif branch == 2:
        s1 = _padd(term(a * b, al, al), term(-c * c, be, ga))
        s2 = _padd(term(a * c, ga, ga), term(-b * b, al, be))
        s3 = _padd(term(b * c, be, be), term(-a * a, al, ga))
    else:
        raise ValueError("branch is 1 or 2")
    return s1, s2, s3


def eval_quadratic(form, q):
    acc = 0
    for (i, j, k), c in form.items():
        acc = acc + c * q[0] ** i * q[1] ** j * q[2] ** k
    return acc


def _branch_relations(d, branch):
    S = sigma_as_quadratic(d, branch)
    lam = d.curve.lam
    g = {(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1, (1, 1, 1): -3 * lam}
    cols = []
    for j, k in product(range(3), repeat=2):
        cols.append(_pmul({_UNIT[j]: 1}, S[k]))
    cols.append(_pscale(g, -1))
    rows = [[col.get(e, 0) for col in cols] for e in _CUBICS]
    ker = ExactMatrix(rows, 10).nullspace()
    return [v[:9] for v in ker]


def relations_from_pair(d, check=True):
    """{f in V⊗V : f(q, sigma(q)) = 0 on E}, intersected over both branches."""
    r1 = _branch_relations(d, 1)
    r2 = _branch_relations(d, 2)
    rel = RelationSpace(intersect(r1, r2, 9))
    if check and rel.dim != 3 and is_regular_pair(d):
        raise UnexpectedDimension(f"relation space has dimension {rel.dim}, expected 3")
    return rel


def derivation_quotient_relations(w):
    return RelationSpace([left_deriv(w, i) for i in range(3)])


def fiber_at(d, r, rel):
    """The unique point s with f(r, s) = 0 for all relations f."""
    r = d.curve.lift(r)
    rows = []
    for f in rel.basis:
        rows.append([sum((f.coeffs[3 * j + k] * r[j] for j in range(3)), 0) for k in range(3)])
    ker = ExactMatrix(rows, 3).nullspace()
    if len(ker) != 1:
        raise FiberNotPoint(f"fiber over {r} has dimension {len(ker)}")
    return ProjPoint(*ker[0], tower=d.curve.tower)


# -- regularity and isomorphism --------------------------------------------


def in_e3(p):
    a, b, c = p.coords
    return not (a * b * c)


def is_regular_pair(d):
    """tau^i(3p) = 3p and p not in E[3]."""
    if in_e3(d.p):
        return False
    return d.curve.triple_fixed(d.p, d.auto, d.i)


def isomorphism_orbit(d):
    """{tau^l(p) + r : l in Z_|tau|, r in U^{tau^i}}."""
    c, t = d.curve, d.auto
    upper = c.u_upper_closed(t, d.i)
    out = {}
    for l in range(t.order):
        tp = t.apply(d.p, l)
        for r in upper:
            out.setdefault(c.add(tp, r), None)
    return list(out)


def pairs_isomorphic(d1, d2):
    if d1.curve != d2.curve or d1.auto.kind != d2.auto.kind:
        raise ValueError("pairs live on different curves")
    if d1.i != d2.i:
        return False
    return d2.p in set(isomorphism_orbit(d1))


# -- types and classification ------------------------------------------------

TYPE_A_CONSTRAINT = "abc != 0 and (a^3+b^3+c^3)^3 != (3abc)^3"


def type_tag(kind, i):
    """A, B, E, H, or None when no regular pair has this exponent."""
    if i == 0:
        return "A"
    order = CurveAuto.ORDERS[kind]
    if 2 * i == order:
        return "B"
    if kind == "tau2":
        return "E" if i in (2, 4) else None
    if kind == "tau3":
        return "H"
    return None


def type_a_regular(p):
    a, b, c = p.coords
    return bool(a * b * c) and (a**3 + b**3 + c**3) ** 3 != (3 * a * b * c) ** 3


def regular_points(curve, i):
    """p in U_{tau^i} minus E[3], in enumeration order (finite i only)."""
    U = curve.u_lower(curve.auto, i)
    return [p for p in U if not in_e3(p)]


def isomorphism_classes(curve, i):
    pts = regular_points(curve, i)
    classes = []
    seen = set()
    for p in pts:
        if p in seen:
            continue
        d = PairDescriptor(curve, p, i)
        orbit = set(isomorphism_orbit(d))
        members = [q for q in pts if q in orbit]
        seen.update(members)
        classes.append((d, members))
    return classes


def classify(curve, with_algebra=True):
    """Classification report for one curve (JSON-ready dict)."""
    from .tables import twisted_potential

    kind = curve.auto.kind
    lam3 = curve.lam**3
    if kind == "tau1" and (curve.lam == 0 or lam3 == -8 or curve.j_invariant() == 1728):
        raise ValueError("j in {0, 1728}: use lambda = 0 or lambda = 1 + sqrt3")
    types = [{
        "tag": "A",
        "exponent": 0,
        "representative_point": None,
        "count": None,
        "constraint": TYPE_A_CONSTRAINT,
        "relations": None,
        "potential": None,
    }]
    counts = {}
    for i in range(1, curve.auto.order):
        tag = type_tag(kind, i)
        if tag is None:
            continue
        for d, members in isomorphism_classes(curve, i):
            entry = {
                "tag": tag,
                "exponent": i,
                "representative_point": d.p.to_json(),
                "count": len(members),
            }
            if with_algebra:
                entry["relations"] = relations_from_pair(d).to_json()
                entry["potential"] = twisted_potential(d).to_pairs()
            types.append(entry)
            counts[tag] = counts.get(tag, 0) + 1
    return {
        "lambda": str(curve.lam),
        "j_invariant": str(curve.j_invariant()),
        "counts": counts,
        "types": types,
    }


# -- Hilbert function ------------------------------------------------------------


def hilbert_dims(rel, nmax=4):
    """dim A_n for n = 0..nmax of T(V)/(R)."""
    if nmax > 5:
        raise ValueError("nmax <= 5")
    basis = [list(b.coeffs) for b in rel.basis] if isinstance(rel, RelationSpace) else rel
    dims = []
    for n in range(nmax + 1):
        if n < 2 or not basis:
            dims.append(3**n)
            continue
        rows = []
        for a in range(n - 1):
            b = n - 2 - a
            for left in range(3**a):
                for right in range(3**b):
                    for f in basis:
                        row = [0] * 3**n
                        for k, c in enumerate(f):
                            if c:
                                row[(left * 9 + k) * 3**b + right] = c
                        rows.append(row)
        dims.append(3**n - ExactMatrix(rows, 3**n).rank())
    return dims


# -- automorphisms of Sklyanin potentials -------------------------------------


def sigma_p1(tower):
    from .exactfield import constants

    e = constants(tower)["eps"]
    return LinMap.diag(e * e, 1, e)


def sigma_p2():
    return LinMap([[0, 1, 0], [0, 0, 1], [1, 0, 0]])


def paut_membership(p, t):
    return aut_scalar(sklyanin(p), t) is not None


def paut_group(p, gens):
    """Closure of ``gens`` in PGL(V), as matrices normalized by first nonzero entry."""
    def norm(m):
        flat = [x for r in m.matrix.rows for x in r]
        lead = next(x for x in flat if x)
        return LinMap([[x / lead for x in r] for r in m.matrix.rows])

    def key(m):
        return tuple(x for r in m.matrix.rows for x in r)

    elems = {key(norm(LinMap.identity())): norm(LinMap.identity())}
    frontier = list(elems.values())
    gens = [norm(g) for g in gens]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                h = norm(m @ g)
                k = key(h)
                if k not in elems:
                    elems[k] = h
                    nxt.append(h)
        frontier = nxt
    return list(elems.values())


# -- the Type E obstruction ------------------------------------------------------


def verify_type_e_not_twist(curve, samples=None):
    """No twist (p+r, 3j) of a Sklyanin algebra is isomorphic to a Type E pair.

    Returns (ok, records) with one record per sample base point.
    """
    if curve.auto.kind != "tau2":
        raise ValueError("needs lambda = 0")
    e_pairs = [d for i in (2, 4) for d, _ in isomorphism_classes(curve, i)]
    e_exps = sorted({d.i for d in e_pairs})
    if samples is None:
        samples = regular_points(curve, 3) + [curve.special_point()]
    e3 = list(curve.torsion(3))
    records = []
    ok = True
    for p in samples:
        exps = set()
        hit = False
        for r in e3:
            for j in (0, 1):
                d = PairDescriptor(curve, curve.add(p, r), 3 * j)
                exps.add(d.i)
                if any(pairs_isomorphic(e, d) for e in e_pairs):
                    hit = True
        disjoint = not (exps & set(e_exps))
        ok = ok and disjoint and not hit
        records.append({"point": p.to_json(), "exponents": sorted(exps),
                        "type_e_exponents": e_exps, "disjoint": disjoint, "isomorphic": hit})
    return ok, records

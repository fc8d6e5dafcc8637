import pytest

from typeec.errors import FiberNotPoint
from typeec.exactfield import constants
from typeec.geomalg import (
    PairDescriptor,
    RelationSpace,
    classify,
    derivation_quotient_relations,
    fiber_at,
    hilbert_dims,
    in_e3,
    is_regular_pair,
    isomorphism_classes,
    isomorphism_orbit,
    pairs_isomorphic,
    paut_group,
    paut_membership,
    relations_from_pair,
    sigma_p1,
    sigma_p2,
    type_tag,
    verify_type_e_not_twist,
)
from typeec.parse import parse_point, parse_potential, parse_quadratic
from typeec.tables import twisted_potential
from typeec.tensor import LinMap, sklyanin


def pt(c, s):
    return c.lift(parse_point(s, c.tower))


def test_type_tags():
    assert [type_tag("tau2", i) for i in range(6)] == ["A", None, "E", "B", "E", None]
    assert [type_tag("tau3", i) for i in range(4)] == ["A", "H", "B", "H"]
    assert [type_tag("tau1", i) for i in range(2)] == ["A", "B"]


def test_descriptor_validation(c0):
    with pytest.raises(ValueError):
        PairDescriptor(c0, c0.point(1, 2, 3), 0)
    d = PairDescriptor(c0, c0.special_point(), 8)
    assert d.i == 2


def test_regularity(c0, cgen):
    assert is_regular_pair(PairDescriptor(c0, c0.special_point(), 2))
    assert not is_regular_pair(PairDescriptor(c0, c0.o, 0))
    assert not is_regular_pair(PairDescriptor(c0, c0.special_point(), 1))
    assert is_regular_pair(PairDescriptor(cgen, cgen.point(1, 1, 2), 1))


def test_sklyanin_relations(c0):
    # the pair (p, id) gives the Sklyanin algebra of p
    p = c0.special_point()
    rel = relations_from_pair(PairDescriptor(c0, p, 0))
    assert rel.dim == 3
    assert rel == derivation_quotient_relations(sklyanin(p))


def test_identity_pair_relations(cgen):
    # translation by o: the commutative polynomial ring
    rel = relations_from_pair(PairDescriptor(cgen, cgen.o, 0), check=False)
    comm = RelationSpace([parse_quadratic(s) for s in ("xy-yx", "yz-zy", "zx-xz")])
    assert rel.dim == 3 and rel == comm


@pytest.mark.parametrize("lam", ["0", "1+sqrt3", "5/3"])
def test_pair_relations_match_potential(curves, lam):
    c = curves[lam]
    for i in range(1, c.auto.order):
        if type_tag(c.auto.kind, i) is None:
            continue
        for d, _ in isomorphism_classes(c, i):
            rel = relations_from_pair(d)
            assert rel == derivation_quotient_relations(twisted_potential(d))


def test_fibers_are_points(c0):
    d = PairDescriptor(c0, c0.special_point(), 2)
    rel = relations_from_pair(d)
    for r in list(c0.torsion(6))[:8]:
        assert fiber_at(d, r, rel) == d.sigma(r)


def test_fiber_not_point(cgen):
    d = PairDescriptor(cgen, cgen.o, 0)
    with pytest.raises(FiberNotPoint):
        fiber_at(d, cgen.o, RelationSpace([]))


def test_relation_dimension_on_six_torsion(c0):
    for p in c0.torsion(6):
        for i in range(c0.auto.order):
            assert relations_from_pair(PairDescriptor(c0, p, i)).dim == 3


def test_isomorphism_examples(c0):
    q = c0.special_point()
    d = PairDescriptor(c0, q, 2)
    assert pairs_isomorphic(d, PairDescriptor(c0, c0.auto.apply(q), 2))
    assert not pairs_isomorphic(d, PairDescriptor(c0, q, 4))
    assert q in isomorphism_orbit(d)
    assert len(set(isomorphism_orbit(d))) == 18


@pytest.mark.parametrize("lam,counts,sizes", [
    ("0", {"E": 2, "B": 1}, [18, 27, 18]),
    ("1+sqrt3", {"H": 2, "B": 2}, [9, 9, 18, 9]),
    ("5/3", {"B": 3}, [9, 9, 9]),
])
def test_classify(curves, lam, counts, sizes):
    out = classify(curves[lam], with_algebra=False)
    assert out["counts"] == counts
    assert out["types"][0]["tag"] == "A"
    assert sorted(t["count"] for t in out["types"][1:]) == sorted(sizes)


def test_classify_rejects_special_generic_form():
    from typeec.hesse import HesseCurve

    with pytest.raises(ValueError):
        classify(HesseCurve("-2"))


def test_hilbert_free_and_polynomial():
    assert hilbert_dims(RelationSpace([]), 4) == [1, 3, 9, 27, 81]
    comm = RelationSpace([parse_quadratic(s) for s in ("xy-yx", "yz-zy", "zx-xz")])
    assert hilbert_dims(comm, 4) == [1, 3, 6, 10, 15]


def test_hilbert_degenerate():
    # words avoiding xx: a_n = 2 a_{n-1} + 2 a_{n-2}
    rel = derivation_quotient_relations(parse_potential("x^3"))
    assert rel.dim == 1
    assert hilbert_dims(rel, 4) == [1, 3, 8, 22, 60]


def test_hilbert_type_e(c0):
    rel = relations_from_pair(PairDescriptor(c0, c0.special_point(), 2))
    assert hilbert_dims(rel, 4) == [1, 3, 6, 10, 15]


def test_paut(c0, c1728):
    q = c0.special_point()
    t = c0.tower
    assert paut_membership(q, sigma_p1(t)) and paut_membership(q, sigma_p2())
    assert not paut_membership(q, LinMap.of(c0.auto, 1))
    assert len(paut_group(q, [sigma_p1(t), sigma_p2()])) == 9
    e2 = [p for p in c0.torsion(2) if p != c0.o][0]
    gens = [sigma_p1(t), sigma_p2(), LinMap.of(c0.tau1, 1)]
    assert all(paut_membership(e2, g) for g in gens)
    assert len(paut_group(e2, gens)) == 18
    h = c1728.point(1, 1, c1728.lam)
    gens = [sigma_p1(c1728.tower), sigma_p2(), LinMap.of(c1728.auto, 1)]
    assert all(paut_membership(h, g) for g in gens)
    assert len(paut_group(h, gens)) == 36


def test_type_e_not_twist(c0):
    ok, records = verify_type_e_not_twist(c0, [c0.special_point()])
    assert ok
    assert records[0]["exponents"] == [0, 3]


def test_in_e3(c0):
    assert in_e3(c0.o) and not in_e3(c0.special_point())


def test_branch_one_vanishes_at_origin(c0):
    from typeec.geomalg import eval_quadratic, sigma_as_quadratic

    eps = constants(c0.tower)["eps"]
    d = PairDescriptor(c0, c0.point(1, -eps, 0), 0)
    o = c0.o.coords
    assert all(eval_quadratic(f, o) == 0 for f in sigma_as_quadratic(d, 1))
    assert d.sigma(c0.o) == d.p


def test_type_e_sigma_at_origin(c0):
    d = PairDescriptor(c0, c0.special_point(), 2)
    assert d.sigma(c0.o) == d.p


def test_fibers_type_e_and_h(c0, c1728):
    eps = constants(c0.tower)["eps"]
    d = PairDescriptor(c0, c0.special_point(), 2)
    r = c0.point(1, -eps, 0)
    assert fiber_at(d, r, relations_from_pair(d)) == c0.add(c0.auto.apply(r, 2), d.p)
    h = c1728.point(1, 1, c1728.lam)
    d = PairDescriptor(c1728, h, 1)
    assert fiber_at(d, h, relations_from_pair(d)) == c1728.add(c1728.auto.apply(h), h) == c1728.o


def test_isomorphism_of_b_pairs(c0, cgen):
    s2 = cgen.tower.gen("sqrt2")
    d = PairDescriptor(cgen, cgen.point(1, 1, 2), 1)
    assert pairs_isomorphic(d, d)
    assert not pairs_isomorphic(d, PairDescriptor(cgen, cgen.point(1, 1, -1 + s2), 1))
    k = constants(c0.tower)
    p1 = c0.point(1, 1, -k["cbrt2"])
    assert pairs_isomorphic(PairDescriptor(c0, p1, 3), PairDescriptor(c0, c0.point(1, 1, -k["cbrt2"] * k["eps"]), 3))


def test_hilbert_degenerate_span():
    dims = hilbert_dims(RelationSpace([parse_quadratic(s) for s in ("xy", "yx", "x^2")]), 3)
    assert dims[2] == 6 and dims[3] != 10


def test_paut_examples(c0, c1728):
    cbrt2 = constants(c0.tower)["cbrt2"]
    p = c0.point(1, 1, -cbrt2)
    assert paut_membership(p, LinMap.of(c0.auto, 3))
    assert not paut_membership(p, LinMap.of(c0.auto, 1))
    h = c1728.point(1, 1, c1728.lam)
    assert paut_membership(h, LinMap.of(c1728.auto, 1))
    assert paut_membership(h, sigma_p1(c1728.tower))


def test_type_a_constraint_on_curve(curves):
    from typeec.geomalg import type_a_regular

    for c in curves.values():
        for p in c.torsion(6):
            assert type_a_regular(p) == is_regular_pair(PairDescriptor(c, p, 0))

import random

import pytest

from typeec.errors import DegenerateAddition
from typeec.exactfield import constants
from typeec.hesse import CurveAuto, CurveSubset, HesseCurve, ProjPoint
from typeec.parse import parse_point


def pt(c, s):
    return c.lift(parse_point(s, c.tower))


def test_projpoint_canonical():
    p = ProjPoint(0, 2, 4)
    assert p.coords == (0, 1, 2)
    assert ProjPoint(2, 4, 6) == ProjPoint(1, 2, 3)
    with pytest.raises(ValueError):
        ProjPoint(0, 0, 0)


def test_singular_lambda_rejected():
    with pytest.raises(ValueError):
        HesseCurve(1)
    with pytest.raises(ValueError):
        HesseCurve("eps")


def test_contains(c0, c1728):
    assert c0.contains(pt(c0, "1:-1:0"))
    assert c1728.contains(pt(c1728, "1:1:1+sqrt3"))
    assert not c1728.contains(pt(c1728, "1:1:1-sqrt3"))


def test_j_invariant(c0, c1728, cgen):
    assert c0.j_invariant() == 0
    assert c1728.j_invariant() == 1728
    assert str(cgen.j_invariant()) == "4956477625/941192"


def test_add_examples(c0):
    eps = constants(c0.tower)["eps"]
    p = c0.point(1, -eps, 0)
    assert c0.add(p, c0.point(-eps, 1, 0)) == c0.o
    q = c0.special_point()
    eta = constants(c0.tower)["eta"]
    assert c0.add(q, q) == c0.point(eta, eta**8, eta**3)
    assert c0.add(c0.add(q, q), q) == c0.point(1, -(eta**3), 0)
    assert c0.scalar_mul(9, q) == c0.o
    assert c0.scalar_mul(-1, q) == c0.neg(q)


def test_identity_law_generic(cgen):
    p = cgen.point(1, 1, 2)
    assert cgen.add(p, cgen.o) == p
    assert cgen.neg(p) == p
    assert cgen.add(p, p) == cgen.o


def test_neg_examples(c0):
    eps = constants(c0.tower)["eps"]
    assert c0.neg(c0.o) == c0.o
    assert c0.neg(c0.point(1, -eps, 0)) == c0.point(-eps, 1, 0)


def test_degenerate_addition(c0):
    # points off the curve can make both formulas vanish
    with pytest.raises(DegenerateAddition):
        c0.add(c0.point(1, 0, 0), c0.point(1, 0, 0))


def test_scalar_mul_two_torsion(c0):
    cbrt2 = constants(c0.tower)["cbrt2"]
    assert c0.scalar_mul(2, c0.point(1, 1, -cbrt2)) == c0.o
    assert c0.scalar_mul(0, c0.point(1, 1, -cbrt2)) == c0.o


def test_torsion_sizes(curves):
    for c in curves.values():
        assert (len(c.torsion(2)), len(c.torsion(3)), len(c.torsion(6))) == (4, 9, 36)
        assert all(p.coords[0] * p.coords[1] * p.coords[2] == 0 for p in c.torsion(3))
        assert all(c.contains(p) for p in c.torsion(6))


def test_e2_lists(c0, cgen):
    want = {pt(c0, s) for s in ("1:-1:0", "1:1:-cbrt2", "1:1:-cbrt2*eps", "1:1:-cbrt2*eps^2")}
    assert set(c0.torsion(2)) == want
    s2 = cgen.tower.gen("sqrt2")
    assert set(cgen.torsion(2)) == {cgen.o, cgen.point(1, 1, 2), cgen.point(1, 1, -1 + s2),
                                    cgen.point(1, 1, -1 - s2)}


def test_auto_orders(c0, c1728):
    for c in (c0, c1728):
        t = c.auto
        for p in c.torsion(6):
            assert t.apply(p, t.order) == p
            assert c.contains(t.apply(p))
    # tau2^3 = tau3^2 = tau1 as maps
    for c, k in ((c0, 3), (c1728, 2)):
        assert all(c.auto.apply(p, k) == c.tau1.apply(p) for p in c.torsion(6))


def test_apply_examples(c1728):
    t1 = CurveAuto("tau1", c1728.tower)
    assert t1.apply(c1728.point(1, 2, 3)) == c1728.point(2, 1, 3)
    p = c1728.point(1, 1, c1728.lam)
    assert c1728.auto.apply(p) == p


def test_auto_is_homomorphism_on_torsion(curves):
    rng = random.Random(7)
    for c in curves.values():
        pts = list(c.torsion(6))
        for _ in range(40):
            p, q = rng.choice(pts), rng.choice(pts)
            t = c.auto
            assert t.apply(c.add(p, q)) == c.add(t.apply(p), t.apply(q))


def test_branches_agree(curves):
    rng = random.Random(3)
    for c in curves.values():
        pts = list(c.torsion(6))
        for _ in range(60):
            p, q = rng.choice(pts), rng.choice(pts)
            b1, b2 = c.branches(p, q)
            if any(b1) and any(b2):
                assert ProjPoint(*b1, tower=c.tower) == ProjPoint(*b2, tower=c.tower)


def test_fixed_locus_examples(c0, c1728, cgen):
    assert cgen.fixed_locus(cgen.auto, 1) == cgen.torsion(2)
    assert c0.fixed_locus(c0.auto, 1) == CurveSubset([c0.o])
    assert c1728.fixed_locus(c1728.auto, 1) == CurveSubset([c1728.o, c1728.point(1, 1, c1728.lam)])
    assert c0.fixed_locus(c0.auto, 0).entire


@pytest.mark.parametrize("lam", ["0", "1+sqrt3", "5/3"])
def test_loci_against_definitions(curves, lam):
    c = curves[lam]
    t = c.auto
    e6 = list(c.torsion(6))
    for i in range(t.order):
        fl = c.fixed_locus(t, i)
        brute = c.fixed_points_in(e6, t, i)
        assert (len(brute) == 36) if fl.entire else (fl == brute)
        assert c.u_upper(t, i) == c.u_upper_closed(t, i)
        ul = c.u_lower(t, i)
        if not ul.entire:
            assert len(ul) == 9 * len(fl)
            assert all(c.in_u_lower(p, t, i) and c.triple_fixed(p, t, i) for p in ul)


def test_u_lower_examples(c0, cgen):
    assert cgen.u_lower(cgen.auto, 1) == cgen.torsion(6)
    assert c0.u_lower(c0.auto, 1) == c0.torsion(3)
    assert c0.u_lower(c0.auto, 5) == c0.torsion(3)
    u = c0.u_lower(c0.auto, 2)
    assert len(u) == 27 and c0.special_point() in u
    assert pt(c0, "eta:eta^8:1") in u


def test_u_upper_examples(c0, cgen):
    eps = constants(c0.tower)["eps"]
    assert c0.u_upper(c0.auto, 0) == CurveSubset([c0.o])
    assert c0.u_upper(c0.auto, 2) == CurveSubset([c0.o, c0.point(1, -eps, 0), c0.point(1, -eps * eps, 0)])
    assert cgen.u_upper(cgen.auto, 1) == cgen.torsion(3)


def test_curve_subset_whole():
    s = CurveSubset.all()
    assert ProjPoint(1, 2, 3) in s
    with pytest.raises(TypeError):
        len(s)
    assert s.to_json() == "E"


def test_bad_exponent(c0):
    with pytest.raises(ValueError):
        c0.fixed_locus(c0.auto, 6)

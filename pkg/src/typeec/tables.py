"""Reference lists of regular pairs and regular twisted superpotentials.

The printed forms are kept verbatim (as parseable strings, with symbols
``lam``, ``eps``, ``eta``, ``c``) so they can be compared against values
recomputed from the pair data.  Known misprints are kept as printed and the
corrected forms live next to them.
"""

from __future__ import annotations

from .parse import parse_point, parse_potential, parse_quadratic
from .tensor import LinMap, apply_slots, ms_twist, sklyanin

# regular geometric pairs, one entry per type
PAIRS = {
    "A": {"exponents": (0,), "point": "a:b:c",
          "condition": "abc != 0 and (a^3+b^3+c^3)^3 != (3abc)^3"},
    "B": {"exponents": ("half",), "point": "1:1:c", "condition": "c^3 - 3*lam*c + 2"},
    "E": {"lambda": "0", "exponents": (2, 4), "point": "eta^8:eta^4:1"},
    "H": {"lambda": "1+sqrt3", "exponents": (1, 3), "point": "1:1:lam"},
}

SKLYANIN = "a(xyz+yzx+zxy)+b(xzy+yxz+zyx)+c(x^3+y^3+z^3)"

TYPE_B_PRINTED = "(x^z+yzx+zy^2)+(xzy+y^2z+zx^2)+c(xyx+yxy+z^3)"
TYPE_B_CORRECTED = "(x^2z+yzx+zy^2)+(xzy+y^2z+zx^2)+c(xyx+yxy+z^3)"
TYPE_B_CONDITION_PRINTED = "c^3 - lam*c + 2"

TYPE_E = [
    {
        "exponent": 2,
        "point": "eta^8:eta^4:1",
        "potential": "xzx+eta zx^2+eta^8x^2z+yxy+eta^4 xy^2+eta^5y^2x"
                     "+zyz+eta^7yz^2+eta^2z^2y",
        "left": ["zx+eta^8xz+eta^4y^2", "xy+eta^5yx+eta^7z^2", "eta x^2+yz+eta^2zy"],
        "right": ["xz+eta zx+eta^5y^2", "yx+eta^4xy+eta^2z^2", "eta^8x^2+zy+eta^7yz"],
        "scalars": ["eta^8", "eta^5", "eta^2"],
    },
    {
        "exponent": 4,
        "point": "eta:eta^5:1",
        "potential": "xzx+eta^8 zx^2+eta x^2z+yxy+eta^5xy^2+eta^4y^2x"
                     "+zyz+eta^2yz^2+eta^7z^2y",
        "left": ["zx+eta xz+eta^5y^2", "xy+eta^4yx+eta^2z^2", "eta^8 x^2+yz+eta^7zy"],
        "right": ["xz+eta^8 zx+eta^4y^2", "yx+eta^5xy+eta^7z^2", "eta x^2+zy+eta^2yz"],
        "scalars": ["eta^8", "eta^5", "eta^2"],
    },
]

TYPE_H = {
    1: "(eps xyz+lam yzx+eps^2zxy)+(lam xzy+eps yxz+eps^2zyx)"
       "+(eps lam x^2y+xyx+eps^2lam yx^2)+(eps^2x^2z+xzx+eps zx^2)"
       "+(eps lam y^2x+yxy+eps^2lam yx^2)+(eps^2y^2z+yzy+eps zy^2)"
       "+(z^2x+lam zxz+xz^2)+(z^2y+lam zyz+yz^2)+(x^3+y^3+lam z^3)",
    3: "(eps^2 xyz+lam yzx+eps zxy)+(lam xzy+eps^2 yxz+eps zyx)"
       "+(eps^2lam x^2y+xyx+eps lam yx^2)+(eps x^2z+xzx+eps^2 zx^2)"
       "+(eps^2 lam y^2x+yxy+eps lam yx^2)+(eps y^2z+yzy+eps^2 zy^2)"
       "+(z^2x+lam zxz+xz^2)+(z^2y+lam zyz+yz^2)+(x^3+y^3+lam z^3)",
}


def parse_on(curve, text, **extra):
    syms = {"lam": curve.lam}
    syms.update(extra)
    return parse_potential(text, curve.tower, syms)


def type_e_entry(i):
    return next(e for e in TYPE_E if e["exponent"] == i)


def type_e_potential(curve, i):
    return parse_on(curve, type_e_entry(i)["potential"])


def type_e_derivatives(curve, i, side):
    e = type_e_entry(i)
    return [parse_quadratic(s, curve.tower) for s in e[side]]


def normalized(w):
    lead = next(c for c in w.coeffs if c)
    return w.scale(1 / lead)


def twisted_potential(d):
    """A twisted superpotential whose derivation-quotient algebra is the pair's.

    Types A, B, H: the twist (w_p)^{tau^i}, scaled to a leading coefficient 1.
    Type E: the listed potential, moved to ``d.p`` along tau when needed.
    """
    from .geomalg import type_tag

    tag = type_tag(d.auto.kind, d.i)
    if tag == "A":
        return sklyanin(d.p)
    if tag in ("B", "H"):
        return normalized(ms_twist(sklyanin(d.p), LinMap.of(d.auto, d.i)))
    if tag == "E":
        c = d.curve
        base = c.lift(parse_point(type_e_entry(d.i)["point"], c.tower))
        w = type_e_potential(c, d.i)
        for l in range(d.auto.order):
            if d.auto.apply(d.p, l) == base:
                t = LinMap.of(d.auto, l)
                return apply_slots(w, [t, t, t])
        raise ValueError(f"{d.p} is not a rotation of the listed Type E point")
    raise ValueError("no regular pair with this exponent")

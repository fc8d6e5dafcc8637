"""Text and JSON forms of tower elements.

Text form is an expression over the generator names using ``+ - * / ^`` and
integers; it parses back with :func:`typeec.parse.parse_scalar`.

JSON form is a dense nested array: the outermost array runs over the powers
of the top generator, each entry is the same structure for the level below,
and the leaves are ``"num/den"`` strings of rational coefficients of powers
of the first generator.  An element of Q is a single string.
"""

from fractions import Fraction

from .tower import FieldElement


def _monomial(names, exps):
    parts = []
    for name, k in zip(names, exps):
        if k == 1:
            parts.append(name)
        elif k:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_element(x):
    terms = x.terms()
    if not terms:
        return "0"
    names = x.tower.names
    out = []
    for exps, q in terms:
        mono = _monomial(names, exps)
        if not mono:
            s = str(q)
        elif q == 1:
            s = mono
        elif q == -1:
            s = "-" + mono
        else:
            s = f"{q}*{mono}"
        if not out:
            out.append(s)
        elif s.startswith("-"):
            out.append(" - " + s[1:])
        else:
            out.append(" + " + s)
    return "".join(out)


def _q(s):
    return f"{s.numerator}/{s.denominator}"


def to_json(x):
    t = x.tower
    if not t.levels:
        return _q(x.to_fraction())
    return _dense(t, t.depth, x.v)


def _dense(t, depth, v):
    A = t.arith_at(depth)
    cs = A.coeffs(v)
    n = t.levels[depth - 1].degree
    cs = cs + [A.base.zero] * (n - len(cs))
    if depth == 1:
        return [_q(c) for c in cs]
    return [_dense(t, depth - 1, c) for c in cs]


def from_json(tower, data):
    if not tower.levels:
        if not isinstance(data, str):
            raise ValueError("expected a 'num/den' string")
        return FieldElement(tower, Fraction(data))
    return FieldElement(tower, _undense(tower, tower.depth, data))


def _undense(t, depth, data):
    A = t.arith_at(depth)
    n = t.levels[depth - 1].degree
    if not isinstance(data, list) or len(data) != n:
        raise ValueError(f"expected a list of {n} coefficients at level {depth}")
    if depth == 1:
        return A.from_coeffs([Fraction(s) for s in data])
    return A.from_coeffs([_undense(t, depth - 1, d) for d in data])

"""Roots of low-degree polynomials over a tower.

Roots are looked for inside the tower first (rational roots, pure powers
``t**n = d`` whose roots are rational multiples of power-basis monomials,
and caller-supplied candidates).  Whatever is left over is realized by
adjoining a generator.  No factorization over number fields is attempted.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .tower import adjoin_root


def peval(coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def deflate(coeffs, r):
    """Divide the polynomial by (t - r); ``r`` must be a root."""
    n = len(coeffs) - 1
    out = [None] * n
    acc = 0
    for k in range(n, 0, -1):
        acc = acc * r + coeffs[k]
        out[k - 1] = acc
    return out


def _int_root(x, n):
    """Exact integer n-th root of x >= 0, or None."""
    if x < 0:
        return None
    if n == 2:
        r = isqrt(x)
        return r if r * r == x else None
    lo, hi = 0, 1
    while hi**n <= x:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**n < x:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**n == x else None


def rational_nth_root(q, n):
    q = Fraction(q)
    sign = 1
    if q < 0:
        if n % 2 == 0:
            return None
        sign, q = -1, -q
    a = _int_root(q.numerator, n)
    b = _int_root(q.denominator, n)
    if a is None or b is None:
        return None
    return sign * Fraction(a, b)


def _divisors(n):
    n = abs(n)
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def rational_roots(coeffs):
    """Distinct rational roots of a polynomial with rational coefficients."""
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    roots = []
    while cs and cs[0] == 0:
        cs.pop(0)
        if 0 not in roots:
            roots.append(Fraction(0))
    if len(cs) < 2:
        return roots
    d = 1
    for c in cs:
        d = d * c.denominator // _gcd(d, c.denominator)
    ints = [int(c * d) for c in cs]
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            for s in (1, -1):
                r = Fraction(s * p, q)
                if r not in roots and peval(cs, r) == 0:
                    roots.append(r)
    return roots


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def squarefree_split(n):
    """Write a nonzero integer as k**2 * s with s squarefree (trial division)."""
    sign = -1 if n < 0 else 1
    n = abs(n)
    k = 1
    p = 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            k *= p
        p += 1
    return k, sign * n


def roots_of_unity(tower, n):
    """The n-th roots of unity present in the tower (n in {2, 3})."""
    if n == 2:
        return [tower.one, -tower.one]
    out = [tower.one]
    for e in tower.basis_monomials:
        m = tower.monomial(e)
        if m * m + m + 1 == 0:
            out = [tower.one, m, m * m]
            break
    return out


def monomial_roots(tower, n, d):
    """Roots of ``t**n = d`` of the form (rational) * (power-basis monomial)."""
    d = tower(d)
    if d == 0:
        return [tower.zero]
    zetas = roots_of_unity(tower, n)
    for e in tower.basis_monomials:
        m = tower.monomial(e)
        ratio = d / m**n
        if not ratio.is_rational():
            continue
        q = rational_nth_root(ratio.to_fraction(), n)
        if q is None:
            continue
        r = m * q
        return _distinct([r * z for z in zetas])
    return []


def _distinct(xs):
    out = []
    for x in xs:
        if x not in out:
            out.append(x)
    return out


def sqrt_in_tower(tower, d):
    rs = monomial_roots(tower, 2, d)
    return rs[0] if rs else None


def find_roots(tower, coeffs, *, candidates=(), name="r"):
    """All roots of a polynomial of degree <= 3 over ``tower``.

    Returns ``(roots, tower')`` where ``tower'`` extends ``tower`` by any
    generators that had to be adjoined (named ``name``, ``name+'1'``, ...).
    Roots are listed with multiplicity collapsed.
    """
    cs = [tower(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    if len(cs) - 1 > 3:
        raise ValueError("only degree <= 3 is supported")
    lead = cs[-1]
    cs = [c / lead for c in cs]
    roots = []

    def fresh():
        for cand in _names(name):
            if cand not in tower.names:
                return cand
        raise ValueError("ran out of generator names")

    def add_root(r):
        nonlocal cs
        if r not in roots:
            roots.append(r)
        cs = deflate(cs, r)

    def trial():
        if all(c.is_rational() for c in cs):
            rr = rational_roots([c.to_fraction() for c in cs])
            if rr:
                return [tower(rr[0])]
        for cand in candidates:
            if peval(cs, cand) == 0:
                return [tower(cand)]
        deg = len(cs) - 1
        if deg >= 2 and all(c == 0 for c in cs[1:-1]):
            # pure power: all roots differ by roots of unity, take them together
            return [r for r in monomial_roots(tower, deg, -cs[0]) if peval(cs, r) == 0]
        return []

    while len(cs) > 1:
        deg = len(cs) - 1
        if deg == 1:
            add_root(-cs[0])
            continue
        found = trial()
        if found:
            for r in found:
                add_root(r)
            continue
        if deg == 2:
            b, c = cs[1], cs[0]
            disc = b * b - 4 * c
            s = sqrt_in_tower(tower, disc)
            if s is None:
                if disc.is_rational():
                    q = disc.to_fraction()
                    k, sq = squarefree_split(q.numerator * q.denominator)
                    scale = Fraction(k, q.denominator)
                    gen_name = _sqrt_name(sq) if _sqrt_name(sq) not in tower.names else fresh()
                    tower = adjoin_root(tower, [-sq, 0, 1], gen_name)
                    s = tower.gen(gen_name) * scale
                else:
                    gen_name = fresh()
                    tower = adjoin_root(tower, [-disc, 0, 1], gen_name)
                    s = tower.gen(gen_name)
            for r in ((-b + s) / 2, (-b - s) / 2):
                if r not in roots:
                    roots.append(r)
            cs = [cs[-1]]
            continue
        gen_name = fresh()
        tower = adjoin_root(tower, cs, gen_name)
        cs = [tower(c) for c in cs]
        add_root(tower.gen(gen_name))
    return roots, tower


def _sqrt_name(n):
    return f"sqrt{n}" if n > 0 else f"sqrtm{-n}"


def _names(stem):
    yield stem
    for i in range(1, 1000):
        yield f"{stem}{i}"

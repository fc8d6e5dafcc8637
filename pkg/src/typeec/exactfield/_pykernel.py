"""Pure-Python kernel for polynomials over Q modulo a monic polynomial.

A value is a pair ``(nums, den)`` standing for ``sum(nums[i] t**i) / den``.
Canonical form: no trailing zero numerators, ``den > 0`` and
``gcd(den, *nums) == 1``.  Zero is ``((), 1)``.

The modulus is passed as ``(fn, fd)`` with ``fn[-1] == fd`` so that
``fn / fd`` is monic.
"""

from math import gcd

ZERO = ((), 1)
BACKEND = "python"


def normalize(nums, den):
    n = len(nums)
    while n and not nums[n - 1]:
        n -= 1
    if not n:
        return ZERO
    g = den
    for i in range(n):
        c = nums[i]
        if c:
            g = gcd(g, c)
            if g == 1:
                break
    if den < 0:
        g = -g
    if g == 1:
        return tuple(nums[:n]), den
    return tuple(c // g for c in nums[:n]), den // g


def add(a, b):
    an, ad = a
    bn, bd = b
    if not an:
        return b
    if not bn:
        return a
    if ad == bd:
        if len(an) < len(bn):
            an, bn = bn, an
        out = list(an)
        for i, c in enumerate(bn):
            out[i] += c
        return normalize(out, ad)
    la, lb = len(an), len(bn)
    out = [0] * max(la, lb)
    for i in range(la):
        out[i] = an[i] * bd
    for i in range(lb):
        out[i] += bn[i] * ad
    return normalize(out, ad * bd)


def neg(a):
    an, ad = a
    if not an:
        return a
    return tuple(-c for c in an), ad


def sub(a, b):
    return add(a, neg(b))


def mul(a, b, fn, fd):
    an, ad = a
    bn, bd = b
    if not an or not bn:
        return ZERO
    la, lb = len(an), len(bn)
    if la == 1 and lb == 1:
        return normalize([an[0] * bn[0]], ad * bd)
    out = [0] * (la + lb - 1)
    for i in range(la):
        ai = an[i]
        if ai:
            for j in range(lb):
                out[i + j] += ai * bn[j]
    den = ad * bd
    n = len(fn) - 1
    for k in range(len(out) - 1, n - 1, -1):
        c = out[k]
        if not c:
            continue
        if fd != 1:
            for j in range(k):
                out[j] *= fd
            den *= fd
        base = k - n
        for i in range(n):
            f = fn[i]
            if f:
                out[base + i] -= c * f
        out[k] = 0
    return normalize(out[:n] if len(out) > n else out, den)


def scale(a, num, den):
    """Multiply by the rational ``num/den``."""
    an, ad = a
    if not an or not num:
        return ZERO
    return normalize([c * num for c in an], ad * den)

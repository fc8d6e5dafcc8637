# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel for polynomials over Q modulo a monic polynomial.

Same value contract as ``_pykernel``.  Products whose coefficient growth is
provably bounded run on 128-bit accumulators; everything else falls back to
Python integers.
"""

from . import _pykernel

cdef extern from *:
    ctypedef long long i128 "__int128"

ZERO = ((), 1)
BACKEND = "cython"

cdef enum:
    MAXLEN = 64

cdef long long I64MAX = 9223372036854775807


cdef inline i128 _gcd128(i128 a, i128 b):
    cdef i128 t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


cpdef tuple normalize(nums, den):
    return _pykernel.normalize(nums, den)


cpdef tuple add(tuple a, tuple b):
    cdef tuple an = <tuple>a[0]
    cdef tuple bn = <tuple>b[0]
    cdef Py_ssize_t la = len(an), lb = len(bn), i
    if la == 0:
        return b
    if lb == 0:
        return a
    ad = a[1]
    bd = b[1]
    cdef list out
    if ad == bd:
        if la < lb:
            an, bn = bn, an
            la, lb = lb, la
        out = list(an)
        for i in range(lb):
            out[i] = out[i] + bn[i]
        return _pykernel.normalize(out, ad)
    out = [0] * (la if la > lb else lb)
    for i in range(la):
        out[i] = an[i] * bd
    for i in range(lb):
        out[i] = out[i] + bn[i] * ad
    return _pykernel.normalize(out, ad * bd)


cpdef tuple neg(tuple a):
    return _pykernel.neg(a)


cpdef tuple sub(tuple a, tuple b):
    return add(a, _pykernel.neg(b))


cpdef tuple scale(tuple a, num, den):
    return _pykernel.scale(a, num, den)


cdef tuple _mul_small(tuple an, tuple bn, tuple fn, Py_ssize_t la, Py_ssize_t lb,
                      Py_ssize_t n, den):
    cdef i128 acc[2 * MAXLEN]
    cdef long long av[MAXLEN]
    cdef long long bv[MAXLEN]
    cdef long long fv[MAXLEN]
    cdef Py_ssize_t i, j, k, lo = la + lb - 1, m
    cdef i128 c, g
    for i in range(la):
        av[i] = an[i]
    for j in range(lb):
        bv[j] = bn[j]
    for i in range(n):
        fv[i] = fn[i]
    for k in range(lo):
        acc[k] = 0
    for i in range(la):
        if av[i]:
            for j in range(lb):
                acc[i + j] += <i128>av[i] * bv[j]
    for k in range(lo - 1, n - 1, -1):
        c = acc[k]
        if c:
            for i in range(n):
                if fv[i]:
                    acc[k - n + i] -= c * fv[i]
            acc[k] = 0
    m = lo if lo < n else n
    while m and not acc[m - 1]:
        m -= 1
    if not m:
        return ZERO
    # results must fit in int64 to leave the fast path
    for i in range(m):
        if acc[i] > I64MAX or acc[i] < -I64MAX:
            return None
    if den > I64MAX:
        return _pykernel.normalize([<long long>acc[i] for i in range(m)], den)
    g = <long long>den
    for i in range(m):
        if acc[i]:
            g = _gcd128(g, acc[i])
            if g == 1:
                break
    if g != 1:
        for i in range(m):
            acc[i] = acc[i] // g
        den = den // <long long>g
    return tuple([<long long>acc[i] for i in range(m)]), den


cdef int _maxbits(tuple xs, Py_ssize_t n):
    cdef int m = 0, b
    cdef Py_ssize_t i
    for i in range(n):
        b = (<object>xs[i]).bit_length()
        if b > m:
            m = b
    return m


cpdef tuple mul(tuple a, tuple b, tuple fn, fd):
    cdef tuple an = <tuple>a[0]
    cdef tuple bn = <tuple>b[0]
    cdef Py_ssize_t la = len(an), lb = len(bn), n = len(fn) - 1, steps
    cdef int ba, bb, bf, bits
    if la == 0 or lb == 0:
        return ZERO
    if fd == 1 and la <= MAXLEN and lb <= MAXLEN and n <= MAXLEN:
        ba = _maxbits(an, la)
        bb = _maxbits(bn, lb)
        bf = _maxbits(fn, n)
        if ba <= 62 and bb <= 62 and bf <= 62:
            # |coefficient| after convolution and each reduction step
            bits = ba + bb + (<object>(la if la < lb else lb)).bit_length()
            steps = la + lb - 1 - n
            if steps > 0:
                bits += steps * (bf + 1)
            if bits <= 120:
                res = _mul_small(an, bn, fn, la, lb, n, a[1] * b[1])
                if res is not None:
                    return res
    return _pykernel.mul(a, b, fn, fd)

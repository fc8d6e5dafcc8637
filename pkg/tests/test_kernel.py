import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from typeec.exactfield import _pykernel, kernel

ck = pytest.importorskip("typeec.exactfield._ckernel")

# modulus t^6 + t^3 + 1 and t^4 - 3
MODULI = [((1, 0, 0, 1, 0, 0, 1), 1), ((-3, 0, 0, 0, 1), 1)]

ints = st.one_of(st.integers(-5, 5), st.integers(-(2**70), 2**70))


@st.composite
def values(draw, n):
    nums = draw(st.lists(ints, max_size=n))
    den = draw(st.integers(1, 50))
    return _pykernel.normalize(nums, den)


def test_selected_backend():
    assert kernel.BACKEND in ("cython", "python")


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(MODULI), st.data())
def test_mul_matches(mod, data):
    fn, fd = mod
    n = len(fn) - 1
    a = data.draw(values(n))
    b = data.draw(values(n))
    assert ck.mul(a, b, fn, fd) == _pykernel.mul(a, b, fn, fd)


@settings(max_examples=200, deadline=None)
@given(values(6), values(6))
def test_add_sub_match(a, b):
    assert ck.add(a, b) == _pykernel.add(a, b)
    assert ck.sub(a, b) == _pykernel.sub(a, b)


def test_large_coefficients_fall_back():
    fn, fd = MODULI[0]
    a = ((2**80, 3, 1), 1)
    assert ck.mul(a, a, fn, fd) == _pykernel.mul(a, a, fn, fd)

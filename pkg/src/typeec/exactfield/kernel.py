"""Backend selection for the Q[t]/(f) kernel.

The compiled extension is used when it imports; otherwise the pure-Python
module with the identical contract is used.
"""

try:
    from . import _ckernel as _impl
except ImportError:  # extension not built
    from . import _pykernel as _impl

ZERO = _impl.ZERO
BACKEND = _impl.BACKEND
normalize = _impl.normalize
add = _impl.add
sub = _impl.sub
neg = _impl.neg
mul = _impl.mul
scale = _impl.scale

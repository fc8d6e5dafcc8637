"""The default tower Q(eta)(qrt3)(cbrt2).

* ``eta``: primitive 9th root of unity, root of t^6 + t^3 + 1
* ``qrt3``: fourth root of 3, root of t^4 - 3
* ``cbrt2``: real cube root of 2, root of t^3 - 2

Derived constants: ``eps = eta^3`` (primitive cube root of unity) and
``sqrt3 = qrt3^2``.  The tower has degree 72 over Q.
"""

from functools import lru_cache

from .tower import QQ, adjoin_root


@lru_cache(maxsize=None)
def default_tower():
    t = adjoin_root(QQ, [1, 0, 0, 1, 0, 0, 1], "eta")
    t = adjoin_root(t, [-3, 0, 0, 0, 1], "qrt3")
    t = adjoin_root(t, [-2, 0, 0, 1], "cbrt2")
    return t


def constants(tower=None):
    """Named constants of the default tower, lifted into ``tower``."""
    t = tower if tower is not None else default_tower()
    eta = t.gen("eta")
    qrt3 = t.gen("qrt3")
    return {
        "eta": eta,
        "eps": eta**3,
        "qrt3": qrt3,
        "sqrt3": qrt3**2,
        "cbrt2": t.gen("cbrt2"),
    }

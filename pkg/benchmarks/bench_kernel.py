"""Compare the compiled and pure-Python Q[t]/(f) kernels.

    python3 benchmarks/bench_kernel.py [--repeat N]

Prints per-operation timings for both kernels, then an end-to-end run of the
E[6] addition table on the lambda = 0 curve with each kernel swapped in.
"""

import argparse
import random
import time
import timeit

from typeec.exactfield import _pykernel, tower
from typeec.exactfield import kernel as selected

try:
    from typeec.exactfield import _ckernel
except ImportError:
    _ckernel = None

ETA_MOD = ((1, 0, 0, 1, 0, 0, 1), 1)  # t^6 + t^3 + 1


def sample(rng, bits):
    nums = [rng.randint(-(2**bits), 2**bits) for _ in range(6)]
    return _pykernel.normalize(nums, rng.randint(1, 9))


def bench_ops(mod, repeat):
    rng = random.Random(1)
    fn, fd = ETA_MOD
    rows = []
    for bits in (4, 40, 200):
        pairs = [(sample(rng, bits), sample(rng, bits)) for _ in range(200)]
        for op in ("add", "mul"):
            f = getattr(mod, op)
            args = (fn, fd) if op == "mul" else ()
            t = min(timeit.repeat(lambda: [f(a, b, *args) for a, b in pairs], number=1, repeat=repeat))
            rows.append((op, bits, t / len(pairs) * 1e6))
    return rows


def swap(mod):
    cls = tower._PolyQArith
    cls.add, cls.sub, cls.neg = staticmethod(mod.add), staticmethod(mod.sub), staticmethod(mod.neg)
    selected.mul = mod.mul


def end_to_end(mod):
    from typeec.hesse import HesseCurve

    swap(mod)
    c = HesseCurve(0)
    pts = list(c.torsion(6))
    t0 = time.perf_counter()
    for p in pts:
        for q in pts:
            c.add(p, q)
    return time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    print(f"selected backend: {selected.BACKEND}")
    mods = [("python", _pykernel)] + ([("cython", _ckernel)] if _ckernel else [])
    results = {name: bench_ops(m, args.repeat) for name, m in mods}
    print(f"{'op':<5}{'bits':>6}" + "".join(f"{n + ' us':>14}" for n, _ in mods))
    for k, (op, bits, _) in enumerate(results["python"]):
        print(f"{op:<5}{bits:>6}" + "".join(f"{results[n][k][2]:>14.2f}" for n, _ in mods))
    original_mul = selected.mul
    for name, m in mods:
        print(f"E[6] addition table ({name}): {end_to_end(m):.2f} s")
    swap(_ckernel or _pykernel)
    selected.mul = original_mul


if __name__ == "__main__":
    main()

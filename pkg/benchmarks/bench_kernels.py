"""Compare the compiled and pure-Python kernels.

Run with ``python3 benchmarks/bench_kernels.py``. Prints the best of five
timings for each kernel on each backend.
"""

import random
import timeit
from fractions import Fraction

from metaleibniz import _pykernels

try:
    from metaleibniz import _ckernels
except ImportError:
    _ckernels = None


def _poly(rng, n, deg, terms):
    out = {}
    for _ in range(terms):
        m = [0] * n
        for _ in range(rng.randint(0, deg)):
            m[rng.randrange(n)] += 1
        out[tuple(m)] = Fraction(rng.randint(-9, 9) or 1, rng.choice([1, 2, 3]))
    return out


def _matrix(rng, rows, cols):
    return [[Fraction(rng.randint(-3, 3)) for _ in range(cols)] for _ in range(rows)]


def main():
    rng = random.Random(0)
    a, b = _poly(rng, 4, 6, 40), _poly(rng, 4, 6, 40)
    targets = (1, 2, 3, 0)
    mat = _matrix(rng, 60, 80)
    backends = [("python", _pykernels)]
    if _ckernels is not None:
        backends.append(("cython", _ckernels))
    else:
        print("compiled kernels unavailable; timing pure Python only")
    cases = [
        ("poly_mul 40x40 terms", lambda k: k.poly_mul(a, b), 50),
        ("poly_permute 40 terms", lambda k: k.poly_permute(a, targets), 2000),
        ("rref 60x80", lambda k: k.rref([row[:] for row in mat], 80), 3),
    ]
    for name, fn, number in cases:
        times = {}
        for label, mod in backends:
            best = min(timeit.repeat(lambda: fn(mod), number=number, repeat=5))
            times[label] = best / number
            print(f"{name:24s} {label:7s} {times[label] * 1e3:9.3f} ms")
        if len(times) == 2:
            print(f"{'':24s} speedup {times['python'] / times['cython']:8.2f}x")


if __name__ == "__main__":
    main()

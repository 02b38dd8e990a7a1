"""Compare the compiled and pure-Python elimination kernels.

Times Gauss-Jordan elimination and matrix multiplication on seeded random
rational matrices and prints the per-size speedup.  Run from a checkout
with the extension built:

    python3 benchmarks/bench_backends.py [--seed N] [--repeats N]
"""

import argparse
import random
import time
from fractions import Fraction

from quivsheaf.linalg import _kernels_py

try:
    from quivsheaf.linalg import _kernels_c
except ImportError:
    _kernels_c = None


def random_rows(rng, rows, cols, bound=9):
    return [
        [
            Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
            for _ in range(cols)
        ]
        for _ in range(rows)
    ]


def bench(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    if _kernels_c is None:
        print("compiled kernel not built; install the package first")
        return

    rng = random.Random(args.seed)
    print(f"{'size':>10} {'pure (s)':>12} {'compiled (s)':>12} {'speedup':>8}")
    for n in (10, 20, 40, 60):
        a = random_rows(rng, n, n)
        b = random_rows(rng, n, n)

        t_py = bench(lambda: _kernels_py.rref_pivots(a, n), args.repeats)
        t_c = bench(lambda: _kernels_c.rref_pivots(a, n), args.repeats)
        assert _kernels_py.rref_pivots(a, n) == _kernels_c.rref_pivots(a, n)
        print(f"{f'rref {n}x{n}':>10} {t_py:>12.4f} {t_c:>12.4f} {t_py / t_c:>8.2f}")

        t_py = bench(lambda: _kernels_py.matmul(a, b, n), args.repeats)
        t_c = bench(lambda: _kernels_c.matmul(a, b, n), args.repeats)
        assert _kernels_py.matmul(a, b, n) == _kernels_c.matmul(a, b, n)
        print(f"{f'mul {n}x{n}':>10} {t_py:>12.4f} {t_c:>12.4f} {t_py / t_c:>8.2f}")


if __name__ == "__main__":
    main()

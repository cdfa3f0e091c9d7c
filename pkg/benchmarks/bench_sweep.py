"""Benchmark the elimination sweep: pure-Python kernels vs compiled ones.

Runs the full schedule walk on Haar-random unitaries of the requested sizes
and reports the best wall time per backend.

Usage:
    python benchmarks/bench_sweep.py --sizes 4,8,16,32,64,128 --repeats 5
"""

import argparse
import time

import numpy as np

from meshcompiler import _givens_core_py as pure
from meshcompiler import haar_unitary, pivot_schedule
from meshcompiler.givens import Side

try:
    from meshcompiler import _givens_core as compiled
except ImportError:
    compiled = None


def sweep_args(n):
    steps = pivot_schedule(n)
    tgt_i = np.array([s.target[0] for s in steps], dtype=np.intp)
    tgt_j = np.array([s.target[1] for s in steps], dtype=np.intp)
    right = np.array([1 if s.side is Side.RIGHT else 0 for s in steps], dtype=np.uint8)
    return tgt_i, tgt_j, right


def time_sweep(kernels, u, args, repeats):
    best = float("inf")
    for _ in range(repeats):
        w = u.copy()
        start = time.perf_counter()
        kernels.sweep(w, *args, 1e-12)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="4,8,16,32,64,128",
                        help="comma-separated matrix sizes")
    parser.add_argument("--repeats", type=int, default=5,
                        help="repetitions per size; best time wins")
    parser.add_argument("--seed", type=int, default=0, help="Haar seed")
    opts = parser.parse_args()
    sizes = [int(s) for s in opts.sizes.split(",") if s.strip()]

    if compiled is None:
        print("compiled backend not available; timing the pure backend only")
    header = f"{'n':>5} {'pure (ms)':>12} {'compiled (ms)':>14} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for n in sizes:
        u = haar_unitary(n, opts.seed)
        args = sweep_args(n)
        t_pure = time_sweep(pure, u, args, opts.repeats)
        if compiled is None:
            print(f"{n:>5} {t_pure * 1e3:>12.3f} {'-':>14} {'-':>9}")
        else:
            t_comp = time_sweep(compiled, u, args, opts.repeats)
            print(
                f"{n:>5} {t_pure * 1e3:>12.3f} {t_comp * 1e3:>14.3f} "
                f"{t_pure / t_comp:>8.1f}x"
            )


if __name__ == "__main__":
    main()

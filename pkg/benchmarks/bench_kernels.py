#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Times batch field value / gradient / Laplacian evaluation for a few
(points, sources, dimension) sizes and prints the per-call medians plus
the numba speedup. The numba functions are called once before timing so
JIT compilation stays out of the numbers.

Usage: python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import statistics
import time

import numpy as np

from invsqfield.kernels import BACKEND, _numpy as knp

try:
    from invsqfield.kernels import _numba as knb
except ImportError:
    knb = None


def time_call(fn, args, repeats):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="fewer sizes and repeats")
    args = parser.parse_args()

    sizes = [(1, 10, 5), (1_000, 10, 3), (100_000, 6, 2), (500_000, 10, 3)]
    repeats = 5
    if args.quick:
        sizes = sizes[:3]
        repeats = 3

    print(f"default backend: {BACKEND}")
    if knb is None:
        print("numba unavailable; timing the numpy path only")

    rng = np.random.default_rng(0)
    header = f"{'kernel':<18}{'m':>9}{'n':>4}{'D':>3}{'numpy':>12}{'numba':>12}{'speedup':>9}"
    print(header)
    print("-" * len(header))
    for m, n, dim in sizes:
        sources = rng.uniform(2.0, 4.0, (n, dim))
        weights = rng.uniform(0.5, 2.0, n)
        points = rng.uniform(-1.0, 1.0, (m, dim))
        for name in ("field_values", "field_gradients", "field_laplacians"):
            f_np = getattr(knp, name)
            t_np = time_call(f_np, (points, sources, weights), repeats)
            if knb is not None:
                f_nb = getattr(knb, name)
                f_nb(points, sources, weights)  # warm the JIT
                t_nb = time_call(f_nb, (points, sources, weights), repeats)
                print(f"{name:<18}{m:>9}{n:>4}{dim:>3}{t_np:>12.6f}{t_nb:>12.6f}"
                      f"{t_np / t_nb:>8.1f}x")
            else:
                print(f"{name:<18}{m:>9}{n:>4}{dim:>3}{t_np:>12.6f}{'-':>12}{'-':>9}")


if __name__ == "__main__":
    main()

"""Benchmark the counting kernels: plain-Python backend vs numba backend.

Runs the same workloads through kernels.python_impls() and
kernels.numba_impls() and prints a timing table. The numba functions are
called once before timing so compilation is not measured.

Usage:
    python3 benchmarks/bench_kernels.py [--repeats 3] [--units-max 300]
"""

import argparse
import random
import time

import numpy as np

from autoreal import kernels
from autoreal.numtheory import units


def time_best(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_unit_sweep(impl, n_max):
    def run():
        for n in range(2, n_max + 1):
            for k in units(n):
                impl(n, k)

    return run


def bench_gl(impl, cases):
    def run():
        for p, dim in cases:
            out = np.zeros((4096, p**dim + 1), np.int64)
            assert impl(p, dim, out) > 0

    return run


def bench_perm(impl, perms):
    def run():
        for images in perms:
            impl(images)

    return run


def main():
    ap = argparse.ArgumentParser(description="kernel backend benchmark")
    ap.add_argument("--repeats", type=int, default=3, help="repeats per timing (best kept)")
    ap.add_argument("--units-max", type=int, default=300, help="sweep modulus bound")
    ap.add_argument("--perm-size", type=int, default=200_000, help="random permutation size")
    args = ap.parse_args()

    rng = random.Random(7)
    perms = []
    for _ in range(3):
        images = list(range(args.perm_size))
        rng.shuffle(images)
        perms.append(np.array(images, dtype=np.int64))

    gl_cases = [(7, 2), (11, 2), (13, 2), (3, 3)]

    py = kernels.python_impls()
    workloads = [
        (
            "unit_cycle_counts",
            f"n<={args.units_max}, all units",
            lambda impls: bench_unit_sweep(impls["unit_cycle_counts"], args.units_max),
        ),
        (
            "gl_structure_rows",
            ",".join(f"GL{d}(F{p})" for p, d in gl_cases),
            lambda impls: bench_gl(impls["gl_structure_rows"], gl_cases),
        ),
        (
            "cycle_counts",
            f"3 perms of {args.perm_size}",
            lambda impls: bench_perm(impls["cycle_counts"], perms),
        ),
    ]

    try:
        nb = kernels.numba_impls()
    except ImportError:
        nb = None
        print("numba is not importable; timing the python backend only\n")

    if nb is not None:
        print("compiling numba kernels (untimed) ...")
        nb["unit_cycle_counts"](12, 5)
        nb["gl_structure_rows"](2, 2, np.zeros((16, 5), np.int64))
        nb["cycle_counts"](np.arange(4, dtype=np.int64))

    header = f"{'kernel':<20} {'workload':<34} {'numpy':>10} {'numba':>10} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name, desc, make in workloads:
        t_py = time_best(make(py), args.repeats)
        if nb is None:
            print(f"{name:<20} {desc:<34} {t_py:>9.3f}s {'-':>10} {'-':>9}")
            continue
        t_nb = time_best(make(nb), args.repeats)
        print(f"{name:<20} {desc:<34} {t_py:>9.3f}s {t_nb:>9.3f}s {t_py / t_nb:>8.1f}x")


if __name__ == "__main__":
    main()

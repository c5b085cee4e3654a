#!/usr/bin/env python3
"""Benchmark the pure-Python kernels against the compiled extension.

The workload mirrors the hot loop of the sampling oracles: sign evaluation of
integer-coefficient polynomials on a 1000-point rational grid.  Both
implementations must return identical results; only the wall time differs.

Usage: python benchmarks/bench_kernels.py [--polys N] [--points N]
"""

from __future__ import annotations

import argparse
import random
import time

from realsnf import _pure

try:
    from realsnf import _speedups
except ImportError:
    _speedups = None


def build_workload(n_polys: int, n_points: int, seed: int = 20260808):
    rng = random.Random(seed)
    polys = [
        [rng.randint(-9, 9) for _ in range(rng.randint(1, 9))] for _ in range(n_polys)
    ]
    span = 2 * n_points * 10
    numerators = [-span // 2 + (span // n_points) * j for j in range(n_points)]
    denominator = n_points - 1
    return polys, numerators, denominator


def run(impl, polys, numerators, denominator):
    out = []
    for coeffs in polys:
        out.append(impl.batch_eval_signs(coeffs, numerators, denominator))
    return out


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--polys", type=int, default=200)
    parser.add_argument("--points", type=int, default=1000)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    polys, numerators, denominator = build_workload(args.polys, args.points)
    rows = []
    reference = None
    for name, impl in (("pure", _pure), ("compiled", _speedups)):
        if impl is None:
            print(f"{name:>9}: not built (install with Cython to compile it)")
            continue
        best = float("inf")
        result = None
        for _ in range(args.repeats):
            t0 = time.perf_counter()
            result = run(impl, polys, numerators, denominator)
            best = min(best, time.perf_counter() - t0)
        if reference is None:
            reference = result
        else:
            assert result == reference, "implementations disagree"
        rows.append((name, best))

    print(f"workload: {args.polys} polynomials x {args.points} rational points")
    for name, best in rows:
        print(f"{name:>9}: {best * 1000:8.1f} ms")
    if len(rows) == 2:
        print(f"  speedup: {rows[0][1] / rows[1][1]:.2f}x")


if __name__ == "__main__":
    main()

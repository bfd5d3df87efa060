#!/usr/bin/env python3
"""Benchmark the compiled reduction kernel against the pure-Python twin.

Runs the exact critical-point oracle (the package's hot loop) on a fixed
set of tensors with fixed data seeds and reports wall time per kernel.

    python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from segreml.kernels import available_kernels
from segreml.oracle import oracle_mldeg
from segreml.tensor import ScalingTensor

WORKLOAD = [
    ("rank-deficient n=2 (mldeg 8)", ScalingTensor.from_slices([[[1, 3], [2, 4]], [[2, 1], [4, 6]], [[3, 4], [6, 10]]])),
    ("full-rank n=2 (mldeg 9)", ScalingTensor.from_slices([[[1, 3], [2, 4]], [[2, 1], [4, 6]], [[3, 3], [6, 1]]])),
    ("generic n=2 (mldeg 12)", ScalingTensor.from_slices([[[1, 2], [3, 5]], [[7, 11], [13, 17]], [[19, 23], [29, 31]]])),
    ("generic n=1 (mldeg 6)", ScalingTensor.from_slices([[[1, 2], [3, 5]], [[7, 11], [13, 17]]])),
]


def run(kernel, repeat: int) -> tuple[float, list[int]]:
    best = float("inf")
    counts: list[int] = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        counts = [oracle_mldeg(W, trials=2, seed=9, kernel=kernel).count for _, W in WORKLOAD]
        best = min(best, time.perf_counter() - t0)
    return best, counts


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="take the best of N runs")
    args = parser.parse_args()

    kernels = available_kernels()
    if "compiled" not in kernels:
        print("note: compiled kernel unavailable; benchmarking the pure kernel only")
    results = {}
    for name, kernel in kernels.items():
        best, counts = run(kernel, args.repeat)
        results[name] = (best, counts)
        print(f"{name:12s}  {best:7.3f}s   counts={counts}")
    if len(results) == 2:
        pure, _ = results["pure-python"]
        comp, _ = results["compiled"]
        print(f"speedup: {pure / comp:.2f}x (pure-python / compiled)")
        assert results["pure-python"][1] == results["compiled"][1], "kernels disagree"


if __name__ == "__main__":
    main()

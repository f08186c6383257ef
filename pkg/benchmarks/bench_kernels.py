#!/usr/bin/env python3
"""Benchmark the census cycle-structure kernel: numba vs numpy backends.

The workload is the one the census actually runs: every automorphism of
K_{n,m} as a permutation batch, pushed through cycle_stats in chunks.
The per-element pure-Python signature() path is timed on a sample as the
reference implementation.

Examples:
    python benchmarks/bench_kernels.py              # K_{5,5}, 28800 rows
    python benchmarks/bench_kernels.py -n 6 -m 6    # 1036800 rows
"""

import argparse
import math
import time
from itertools import permutations

import numpy as np

from bipsym import BipartiteShape, enumerate_automorphisms, signature
from bipsym.kernels import available_backends, cycle_stats

CHUNK = 1 << 15


def build_batches(shape):
    n, m = shape.n, shape.m
    vtable = np.array(list(permutations(range(n))), dtype=np.int64)
    wtable = np.array(list(permutations(range(m))), dtype=np.int64)
    pairs = len(vtable) * len(wtable)
    flags = (False, True) if n == m else (False,)
    batches = []
    for swap in flags:
        for lo in range(0, pairs, CHUNK):
            idx = np.arange(lo, min(lo + CHUNK, pairs))
            vi, wi = idx // len(wtable), idx % len(wtable)
            batch = np.empty((len(idx), n + m), dtype=np.int64)
            if swap:
                batch[:, :n] = vtable[vi] + n
                batch[:, n:] = wtable[wi]
            else:
                batch[:, :n] = vtable[vi]
                batch[:, n:] = wtable[wi] + n
            batches.append(batch)
    return batches


def time_backend(batches, n, backend, repeats):
    # warm-up covers one-off JIT compilation
    cycle_stats(batches[0][:64], n, backend=backend)
    best = math.inf
    for _ in range(repeats):
        start = time.perf_counter()
        for batch in batches:
            cycle_stats(batch, n, backend=backend)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("-n", type=int, default=5)
    parser.add_argument("-m", type=int, default=5)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument(
        "--python-sample",
        type=int,
        default=2000,
        help="rows for the pure-Python reference timing (0 disables)",
    )
    args = parser.parse_args()

    shape = BipartiteShape(args.n, args.m)
    batches = build_batches(shape)
    rows = sum(len(b) for b in batches)
    print(f"workload: Aut(K_{{{args.n},{args.m}}}), {rows} permutations")

    results = {}
    for backend in available_backends():
        best = time_backend(batches, shape.n, backend, args.repeats)
        results[backend] = best
        print(f"{backend:>6}: {best:8.3f} s   {rows / best / 1e6:8.2f} M rows/s")

    if "numba" in results and "numpy" in results:
        print(f"speedup: numba is {results['numpy'] / results['numba']:.1f}x faster")

    if args.python_sample:
        sample = []
        for aut in enumerate_automorphisms(shape):
            sample.append(aut)
            if len(sample) >= args.python_sample:
                break
        start = time.perf_counter()
        for aut in sample:
            signature(aut)
        elapsed = time.perf_counter() - start
        print(
            f"python: {elapsed / len(sample) * 1e6:8.2f} us/row "
            f"(signature() on {len(sample)} rows; "
            f"~{rows * elapsed / len(sample):.1f} s for the full workload)"
        )


if __name__ == "__main__":
    main()

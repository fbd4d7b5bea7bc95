"""Timing comparison of the compiled and pure-numpy kernel backends.

Runs row reduction, modular matrix multiplication, and block-weight
enumeration at a few sizes under each available backend and prints a
table of best-of-N wall times.

Usage:
    python3 benchmarks/bench_kernels.py [--sizes 64,128,256] [--repeat 5] [-p 10007]
"""

import argparse
import time

import numpy as np

from fplab import _kernels


def best_of(repeat, fn, *args):
    fn(*args)  # warm-up (includes JIT compilation on the compiled path)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_backend(backend, sizes, repeat, p, rng):
    _kernels.set_backend(backend)
    rows = []
    for n in sizes:
        A = rng.integers(0, p, size=(n, n), dtype=np.int64)
        B = rng.integers(0, p, size=(n, n), dtype=np.int64)
        rows.append((f"rref {n}x{n}", best_of(repeat, _kernels.rref, A, p)))
        rows.append((f"matmul {n}x{n}", best_of(repeat, _kernels.matmul, A, B, p)))
    G = rng.integers(0, 3, size=(8, 30), dtype=np.int64)
    rows.append(
        ("min_block_weight 3^8 x 15 blocks", best_of(repeat, _kernels.min_block_weight, G, 3, 2))
    )
    return rows


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="64,128,256", help="comma-separated matrix sizes")
    parser.add_argument("--repeat", type=int, default=5, help="timed repetitions per kernel")
    parser.add_argument("-p", type=int, default=10007, help="prime modulus")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    sizes = [int(s) for s in args.sizes.split(",") if s]
    rng = np.random.default_rng(args.seed)
    backends = ["numpy"] + (["numba"] if _kernels.HAS_NUMBA else [])
    if not _kernels.HAS_NUMBA:
        print("numba is not installed; timing the numpy backend only")

    results = {b: bench_backend(b, sizes, args.repeat, args.p, rng) for b in backends}
    labels = [label for label, _ in results[backends[0]]]
    width = max(len(label) for label in labels)
    header = f"{'kernel'.ljust(width)} | " + " | ".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += " |      speedup"
    print(header)
    print("-" * len(header))
    for idx, label in enumerate(labels):
        cells = [results[b][idx][1] for b in backends]
        line = f"{label.ljust(width)} | " + " | ".join(f"{t * 1e3:9.3f} ms" for t in cells)
        if len(cells) == 2 and cells[1] > 0:
            line += f" | {cells[0] / cells[1]:11.1f}x"
        print(line)


if __name__ == "__main__":
    main()

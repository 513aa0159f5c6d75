#!/usr/bin/env python3
"""Benchmark the two retrieval kernel backends against each other.

The numpy path does blocked BLAS matmuls and per-row partial selection; the
numba path is a fused parallel scan that never materializes the score matrix.
Both must agree on every ranking; this script times them on growing corpus
sizes and verifies parity as it goes.

Run:  python3 benchmarks/bench_kernels.py [--full]

Use ITRBENCH_PURE_NUMPY=1 with the package itself to force the numpy path in
production runs.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from itrbench import _kernels

# (images, captions-per-image, dim): query side is the caption matrix (t2i)
SIZES_QUICK = [(100, 5, 64), (500, 5, 128), (1000, 5, 256)]
SIZES_FULL = SIZES_QUICK + [(2000, 5, 512), (5000, 5, 512)]


def choose_unit(seconds: float) -> str:
    return f"{seconds * 1e3:8.1f} ms"


def run_once(fn, queries, candidates, k, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn(queries, candidates, k)
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true", help="include large sizes")
    parser.add_argument("--k", type=int, default=10)
    args = parser.parse_args()

    if not _kernels.HAS_NUMBA:
        print("numba is not importable; nothing to compare (numpy path only).")
        return 1

    sizes = SIZES_FULL if args.full else SIZES_QUICK
    rng = np.random.default_rng(0)

    print(f"top-{args.k} retrieval, captions as queries vs image candidates")
    print(f"{'queries':>9} {'cands':>7} {'dim':>5} {'numpy':>12} {'numba':>12} {'speedup':>8}")
    for n_images, cpi, d in sizes:
        nq, nc = n_images * cpi, n_images
        queries = rng.standard_normal((nq, d)).astype(np.float32)
        candidates = rng.standard_normal((nc, d)).astype(np.float32)
        queries /= np.linalg.norm(queries, axis=1, keepdims=True)
        candidates /= np.linalg.norm(candidates, axis=1, keepdims=True)

        # warm the JIT before timing
        _kernels.topk_scores_numba(queries[:4], candidates[:8], args.k)

        t_np, (i_np, v_np) = run_once(
            _kernels.topk_scores_numpy, queries, candidates, args.k)
        t_nb, (i_nb, v_nb) = run_once(
            _kernels.topk_scores_numba, queries, candidates, args.k)

        if not np.array_equal(i_np, i_nb):
            raise SystemExit(f"backend rankings diverged at {(nq, nc, d)}")
        if not np.allclose(v_np, v_nb, atol=1e-9):
            raise SystemExit(f"backend scores diverged at {(nq, nc, d)}")

        print(f"{nq:>9} {nc:>7} {d:>5} {choose_unit(t_np)} {choose_unit(t_nb)} "
              f"{t_np / t_nb:>7.2f}x")

    print("rankings identical across backends on every size")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

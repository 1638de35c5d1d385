#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Times the batch rank/ares transforms, KNN prediction, and LOF scoring on
synthetic data at a few sizes, once per backend, and prints a comparison
table. Run from the repository root:

    python benchmarks/bench_backends.py [--repeats 5]

The same kernels are also selectable at import time with
SCALEFREE_NO_NUMBA=1; this script switches backends in-process instead so
one run covers both.
"""

import argparse
import time

import numpy as np

from scalefree import _kernels
from scalefree.transforms import fit_ares, fit_rank


def _time_best(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def build_cases(rng):
    cases = []

    train = rng.normal(size=50_000)
    queries = rng.normal(size=200_000)
    rank_model = fit_rank(train)
    cases.append(
        (
            "rank_batch  n=200k train=50k",
            lambda: _kernels.rank_batch(rank_model.sorted_train, queries),
        )
    )

    ares_model = fit_ares(train, subsample_size=7, n_subsamples=10, seed=1)
    cases.append(
        (
            "ares_batch  n=200k psi=7 t=10",
            lambda: _kernels.ares_batch(ares_model.subsamples, queries),
        )
    )

    ares_big = fit_ares(train, subsample_size=256, n_subsamples=50, seed=2)
    cases.append(
        (
            "ares_batch  n=200k psi=256 t=50",
            lambda: _kernels.ares_batch(ares_big.subsamples, queries),
        )
    )

    train_x = rng.normal(size=(4_000, 16))
    train_codes = rng.integers(0, 4, size=4_000).astype(np.int64)
    test_x = rng.normal(size=(500, 16))
    cases.append(
        (
            "knn_predict train=4k test=500 m=16 k=5",
            lambda: _kernels.knn_predict(train_x, train_codes, test_x, 5, 4),
        )
    )

    lof_x = rng.normal(size=(1_500, 16))
    cases.append(
        ("lof        n=1500 m=16 k=39", lambda: _kernels.lof_raw(lof_x, 39))
    )
    return cases


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5, help="best-of repeats per case")
    args = parser.parse_args()

    rng = np.random.default_rng(20240901)
    cases = build_cases(rng)

    backends = ["numpy"]
    if _kernels.numba_available():
        backends.append("numba")
    else:
        print("numba not importable; timing the numpy backend only")

    results = {}
    for backend in backends:
        _kernels.set_backend(backend)
        if backend == "numba":
            _kernels.warm_up()  # keep JIT compilation out of the timings
        for name, fn in cases:
            fn()  # one untimed call to warm caches
            results[(name, backend)] = _time_best(fn, args.repeats)

    width = max(len(name) for name, _ in cases)
    header = f"{'case':<{width}}  {'numpy (ms)':>12}"
    if "numba" in backends:
        header += f"  {'numba (ms)':>12}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, _ in cases:
        np_ms = results[(name, "numpy")] * 1e3
        line = f"{name:<{width}}  {np_ms:>12.3f}"
        if "numba" in backends:
            nb_ms = results[(name, "numba")] * 1e3
            line += f"  {nb_ms:>12.3f}  {np_ms / nb_ms:>7.1f}x"
        print(line)


if __name__ == "__main__":
    main()

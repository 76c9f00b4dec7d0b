#!/usr/bin/env python3
"""Time the pure-Python kernels against the compiled build.

Run:  python benchmarks/bench_kernels.py
"""

import random
import time

from diatomic import _pykernels

try:
    from diatomic import _ckernels
except ImportError:
    _ckernels = None


def bench(fn, args_list, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        for args in args_list:
            fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    rng = random.Random(2)

    stern_args = [(m,) for m in range(1, 60000)]
    cont_args = [
        ([rng.randrange(0, 8) for _ in range(rng.randrange(1, 24))],)
        for _ in range(20000)
    ]
    words = [
        "".join(rng.choice("01") for _ in range(rng.randrange(1, 120)))
        for _ in range(4000)
    ]
    word_args = [(w,) for w in words]
    mat_args = [(_pykernels.word_matrix(w),) for w in words]
    peel_args = [m for (m,) in mat_args]

    cases = [
        ("stern_pair, m < 60000", "stern_pair", stern_args),
        ("continuant fold, len < 24", "continuant_pair", cont_args),
        ("word -> matrix, len < 120", "word_matrix", word_args),
        ("matrix -> word (peel)", "matrix_word", peel_args),
    ]

    print(f"{'kernel':34s} {'python':>10s} {'cython':>10s} {'speedup':>9s}")
    for label, name, args_list in cases:
        if name == "matrix_word":
            args_list = [tuple(m) for m in peel_args]
        py = bench(getattr(_pykernels, name), args_list)
        if _ckernels is None:
            print(f"{label:34s} {py * 1e3:9.1f}ms {'-':>10s} {'-':>9s}")
            continue
        cy = bench(getattr(_ckernels, name), args_list)
        print(f"{label:34s} {py * 1e3:9.1f}ms {cy * 1e3:9.1f}ms {py / cy:8.2f}x")

    if _ckernels is None:
        print("\ncompiled kernels not built; only the fallback was timed")


if __name__ == "__main__":
    main()

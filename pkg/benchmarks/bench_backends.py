"""Benchmark the numba kernels against the pure-numpy fallback.

Usage: python benchmarks/bench_backends.py [--sizes 10000 100000 1000000]
"""

import argparse
import time

import numpy as np

from cfkit.backends import available_backends, bound_kernels


def random_rows(rng, n):
    u = rng.random(n)
    v = rng.random(n)
    lo = np.minimum(np.maximum(0.0, u + v - 1.0), np.minimum(u, v))
    j = lo + (np.minimum(u, v) - lo) * rng.random(n)
    return np.column_stack([u - j, v - j, j, 1.0 - u - v + j])


def best_of(fn, repeats=5):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", nargs="+", type=int, default=[10_000, 100_000, 1_000_000])
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    backends = {name: bound_kernels(name) for name in available_backends()}
    if "numba" not in backends:
        print("numba not installed; benchmarking the numpy backend only")

    rng = np.random.default_rng(0)
    print(f"{'kernel':<18}{'n':>10}  " + "".join(f"{name:>12}" for name in backends) + "   speedup")
    for n in args.sizes:
        a = random_rows(rng, n)
        b = random_rows(rng, n)
        cases = {
            "cfim (p=3)": lambda k: k.cfim_pairwise(a, b, 3),
            "legacy (p=3)": lambda k: k.legacy_pairwise(a, b, 3),
            "cfh": lambda k: k.cfh_pairwise(a, b),
            "score (p=2)": lambda k: k.score_many(a, 2, 0.5),
        }
        for label, call in cases.items():
            timings = {}
            for name, kernels in backends.items():
                call(kernels)  # warmup / jit compile
                timings[name] = best_of(lambda: call(kernels), args.repeats)
            row = f"{label:<18}{n:>10}  " + "".join(f"{timings[nm] * 1e3:>10.3f}ms" for nm in backends)
            if len(timings) == 2:
                row += f"   {timings['numpy'] / timings['numba']:>6.2f}x"
            print(row)


if __name__ == "__main__":
    main()

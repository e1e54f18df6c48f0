"""Compare the numba Gray-code sweep with the vectorised numpy fallback.

    python benchmarks/bench_oracle.py --n 14 16 18 20 --repeat 3
"""
import argparse
import time

import numpy as np

from pseudomodel import kernels
from pseudomodel.formula import occurrence_profile
from pseudomodel.generators import gen_random


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - start)
    return min(times), out


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, nargs="+", default=[12, 14, 16, 18, 20])
    parser.add_argument("--clauses-per-var", type=float, default=1.5)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    if not kernels.numba_available():
        raise SystemExit("numba is not installed; nothing to compare")

    # trigger compilation outside the timed region
    warm = gen_random(4, 4, 1, 3, seed=1)
    prof = occurrence_profile(warm)
    kernels.sigma_histogram(prof.p_plus, prof.p_minus, "numba")
    kernels.scan_assignments(warm.n, warm.clauses, (), kernels.MODE_SAT, "numba")

    print(f"{'n':>3} {'kernel':<10} {'numba s':>10} {'numpy s':>10} {'speedup':>8}")
    for n in args.n:
        f = gen_random(n, int(n * args.clauses_per_var), 1, min(4, n), seed=args.seed + n)
        prof = occurrence_profile(f)
        cases = {
            "sigma": lambda b: kernels.sigma_histogram(prof.p_plus, prof.p_minus, b),
            "sat-scan": lambda b: kernels.scan_assignments(f.n, f.clauses, (), kernels.MODE_SAT, b),
        }
        for name, fn in cases.items():
            t_numba, a = best_of(lambda: fn("numba"), args.repeat)
            t_numpy, b = best_of(lambda: fn("numpy"), args.repeat)
            assert np.array_equal(a, b)
            print(f"{n:>3} {name:<10} {t_numba:>10.4f} {t_numpy:>10.4f} {t_numpy / t_numba:>8.1f}x")


if __name__ == "__main__":
    main()

"""Compare the compiled and NumPy row kernels on the congruence sweeps.

    python benchmarks/bench_kernels.py [--max-n 2000] [--repeat 3]

Both backends are checked for identical output before timing.
"""
import argparse
import time

import numpy as np

from toricbord import kernels


def _sweep(kern, max_n, primes, qs):
    for p in primes:
        for n in range(max_n + 1):
            kern.lucas_row(n, p)
            for q in qs:
                kern.granville_row(n, p, q)


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=2000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    backends = kernels.available_backends()
    if "compiled" not in backends:
        print("compiled extension not built; only the python backend is available")
    primes, qs = (2, 3, 5, 7), (1, 2, 3)

    ref = backends["python"]
    for name, kern in backends.items():
        for n in (0, 1, 17, 255, args.max_n):
            for p in primes:
                assert np.array_equal(kern.lucas_row(n, p), ref.lucas_row(n, p)), (name, n, p)
                for q in qs:
                    a, b = kern.granville_row(n, p, q), ref.granville_row(n, p, q)
                    assert np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1]), (name, n, p, q)

    rows = 4 * (args.max_n + 1) * (1 + len(qs))
    results = {}
    for name, kern in backends.items():
        results[name] = _time(lambda k=kern: _sweep(k, args.max_n, primes, qs), args.repeat)
        print(f"{name:9s} {results[name]:8.3f} s  ({rows} rows, n <= {args.max_n})")
    if len(results) == 2:
        print(f"speedup   {results['python'] / results['compiled']:8.2f}x")
    return results


if __name__ == "__main__":
    main()

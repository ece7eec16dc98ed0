"""Compare the numba kernels against the pure-numpy fallbacks.

Usage: python3 benchmarks/bench_kernels.py [--family f27]

Builds a catalog loop, then times the exhaustive left/right Bol scans and
a round of congruence closures on both backends.
"""
import argparse
import time

import numpy as np

from bolloops import catalog, construct, kernels


def timed(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench_table(name, table):
    t = np.ascontiguousarray(table, dtype=np.int32)
    n = t.shape[0]
    print("== %s (order %d, %.2e triples) ==" % (name, n, float(n) ** 3))
    rows = []
    if kernels.HAVE_NUMBA:
        # warm the jit before timing
        kernels._left_bol_nb(t[:2, :2].copy())
        rows.append(("left bol / numba",
                     timed(kernels._left_bol_nb, t)[0]))
        rows.append(("right bol / numba",
                     timed(kernels._right_bol_nb, t)[0]))
    rows.append(("left bol / numpy",
                 timed(kernels.left_bol_exhaustive_numpy, t)[0]))
    rows.append(("right bol / numpy",
                 timed(kernels.right_bol_exhaustive_numpy, t)[0]))

    seeds = list(range(1, min(n, 25)))
    if kernels.HAVE_NUMBA:
        def closure_nb():
            for a in seeds:
                pa = np.array([0], dtype=np.int64)
                pb = np.array([a], dtype=np.int64)
                kernels._congruence_close_nb(t, pa, pb)
        rows.append(("congruence x%d / numba" % len(seeds),
                     timed(closure_nb)[0]))

    def closure_py():
        for a in seeds:
            kernels._congruence_close_python(
                t, np.array([[0, a]], dtype=np.int64))
    rows.append(("congruence x%d / numpy" % len(seeds),
                 timed(closure_py, repeat=1)[0]))
    for label, secs in rows:
        print("  %-28s %10.4fs" % (label, secs))
    print()


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--family", default=None,
                        choices=["sym", "psl-singer", "f27"])
    parser.add_argument("--n", type=int, default=None)
    args = parser.parse_args()
    print("numba available: %s" % kernels.HAVE_NUMBA)
    print("active backend:  %s\n" % kernels.active_backend())
    if args.family:
        entries = [(args.family, args.n)]
    else:
        entries = [("sym", 4), ("psl-singer", 3), ("f27", None)]
    for family, n in entries:
        entry = catalog.get_entry(family, n)
        loop = construct.build_loop(entry.triple)
        label = family if n is None else "%s n=%d" % (family, n)
        bench_table(label, loop.table)


if __name__ == "__main__":
    main()

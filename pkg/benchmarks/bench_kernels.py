"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--n 5 --k 4 --length 6 --words 2000]

Prints one line per (kernel, backend) with the best of --repeat runs, and
checks that both backends return identical results.
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from dihedral_monoid import kernels, new_presentation


def best_of(fn, repeat: int) -> tuple[float, object]:
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--k", type=int, default=4)
    ap.add_argument("--length", type=int, default=6)
    ap.add_argument("--words", type=int, default=2000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    if "cython" not in kernels.BACKENDS:
        print("compiled kernels are not built; only the python backend is available", file=sys.stderr)
        return 1
    p = new_presentation(args.n, args.k)
    rels = sorted(p.relation_set)
    rng = random.Random(0)
    sample = [tuple(rng.randint(1, p.n) for _ in range(rng.randint(0, 4 * p.n))) for _ in range(args.words)]

    jobs = {
        "class_labels": lambda m: list(m.class_labels(p.n, args.length, rels)),
        "all_normal_forms": lambda m: list(m.all_normal_forms(p.n, p.k, args.length)),
        "normal_forms": lambda m: list(m.normal_forms(p.n, p.k, sample)),
    }
    print(f"n={p.n} k={p.k} length={args.length} words={args.words}")
    print(f"{'kernel':<18}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, job in jobs.items():
        tp, rp = best_of(lambda: job(kernels.BACKENDS["python"]), args.repeat)
        tc, rc = best_of(lambda: job(kernels.BACKENDS["cython"]), args.repeat)
        if rp != rc:
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        print(f"{name:<18}{tp:>12.4f}{tc:>12.4f}{tp / tc:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())

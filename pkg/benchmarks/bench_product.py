"""Structured versus dense block Toeplitz products.

Counts Schur block multiplications per method and times each one over a set
of seeded condition-satisfying pairs.

    python3 benchmarks/bench_product.py --n 2 3 4 6 8 --pairs 20
"""

from __future__ import annotations

import argparse
import time

from schurtoeplitz.sampling import random_condition_pair, trial_rng
from schurtoeplitz.schur import SchurShape
from schurtoeplitz.toeplitz import MulCounter, block_grid_product, dense_product, structured_product

METHODS = ("fast", "interpolation", "direct")


def bench(n: int, shape: SchurShape, pairs: int, seed: int) -> list[tuple[str, float, float]]:
    cases = [random_condition_pair(trial_rng(seed, k), n, shape)[:2] for k in range(pairs)]
    rows = []
    for method in METHODS:
        counter = MulCounter()
        start = time.perf_counter()
        for t, u in cases:
            structured_product(t, u, method=method, counter=counter)
        rows.append((method, counter.count / pairs, (time.perf_counter() - start) / pairs))
    counter = MulCounter()
    start = time.perf_counter()
    for t, u in cases:
        block_grid_product(t, u, counter)
    rows.append(("block-grid", counter.count / pairs, (time.perf_counter() - start) / pairs))
    start = time.perf_counter()
    for t, u in cases:
        dense_product(t, u)
    rows.append(("dense", float("nan"), (time.perf_counter() - start) / pairs))
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[2, 3, 4, 6, 8])
    ap.add_argument("--sigma", type=int, default=2)
    ap.add_argument("--tau", type=int, default=2)
    ap.add_argument("--pairs", type=int, default=20)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    shape = SchurShape(args.sigma, args.tau)
    print(f"shape ({shape.sigma},{shape.tau}), {args.pairs} pairs per row")
    print(f"{'n':>3} {'method':<14} {'block muls':>10} {'n^2':>5} {'n^3':>5} {'ms/product':>11}")
    for n in args.n:
        for method, muls, secs in bench(n, shape, args.pairs, args.seed):
            shown = "-" if muls != muls else f"{muls:.1f}"
            print(f"{n:>3} {method:<14} {shown:>10} {n * n:>5} {n ** 3:>5} {secs * 1e3:>11.3f}")


if __name__ == "__main__":
    main()

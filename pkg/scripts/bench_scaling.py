"""Timing tables for the merge dominator and the cutwidth solver.

Prints one row per size with the best of ``--trials`` runs and the growth
ratio against the previous row. Two graph families are timed: random trees
and deep caterpillars, the latter being close to the quadratic worst case.
"""

from __future__ import annotations

import argparse
import random
import time

import numpy as np

from spdcut.generate import caterpillar, random_spd
from spdcut.mergedom import merge_dominator
from spdcut.spdigraph import realize
from spdcut.width import spd_cutwidth


def best_of(trials: int, fn) -> float:
    best = float("inf")
    for _ in range(trials):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def table(title: str, rows: list[tuple[str, float]]) -> None:
    print(f"\n{title}")
    print(f"{'size':>14} {'seconds':>10} {'ratio':>8}")
    prev = None
    for label, secs in rows:
        ratio = "" if prev is None else f"{secs / prev:8.2f}"
        print(f"{label:>14} {secs:10.4f} {ratio:>8}")
        prev = secs


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--trials", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-len", type=int, default=2_000_000)
    parser.add_argument("--max-vertices", type=int, default=4000)
    args = parser.parse_args()

    gen = np.random.default_rng(args.seed)
    rows = []
    n = 125_000
    while n <= args.max_len:
        r = tuple(gen.integers(-10**6, 10**6, n).tolist())
        c = tuple(gen.integers(-10**6, 10**6, n).tolist())
        rows.append((str(n), best_of(args.trials, lambda: merge_dominator(r, c))))
        n *= 2
    table("merge_dominator on random sequences of equal length", rows)

    rng = random.Random(args.seed)
    rand_rows, cat_rows = [], []
    v = 500
    while v <= args.max_vertices:
        g, tree = random_spd(2 * v, rng)
        rand_rows.append((f"{g.n}V", best_of(args.trials, lambda: spd_cutwidth(g, tree))))
        g, tree = realize(caterpillar(v // 2))
        cat_rows.append((f"{g.n}V", best_of(args.trials, lambda: spd_cutwidth(g, tree))))
        v *= 2
    table("spd_cutwidth, random decomposition trees", rand_rows)
    table("spd_cutwidth, caterpillar trees", cat_rows)


if __name__ == "__main__":
    main()

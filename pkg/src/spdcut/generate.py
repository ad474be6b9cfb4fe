"""Decomposition-tree generators for tests, benchmarks and example files."""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterator

from .spdigraph import DecompTree, Leaf, Parallel, Series, realize


def random_tree(leaves: int, rng: random.Random, max_weight: int = 1, p_series: float = 0.5) -> DecompTree:
    """Random tree with ``leaves`` leaves; split sizes uniform, node kinds by coin flip.

    Leaf labels are placeholders, pass the result through
    :func:`spdcut.spdigraph.realize` to get a labelled graph.
    """
    if leaves < 1:
        raise ValueError("a tree needs at least one leaf")
    # explicit stack: deep trees would exhaust the recursion limit
    results: list[DecompTree] = []
    stack: list[tuple[int, str | None]] = [(leaves, None)]
    while stack:
        k, kind = stack.pop()
        if kind is not None:
            right = results.pop()
            left = results.pop()
            results.append(Series(left, right) if kind == "S" else Parallel(left, right))
        elif k == 1:
            results.append(Leaf(0, 0, rng.randint(1, max_weight)))
        else:
            a = rng.randint(1, k - 1)
            stack.append((k, "S" if rng.random() < p_series else "P"))
            stack.append((k - a, None))
            stack.append((a, None))
    return results[0]


def random_spd(leaves: int, rng: random.Random, max_weight: int = 1, p_series: float = 0.5):
    """Labelled ``(digraph, tree)`` pair from :func:`random_tree`."""
    return realize(random_tree(leaves, rng, max_weight, p_series))


@lru_cache(maxsize=None)
def _shapes(k: int) -> tuple[DecompTree, ...]:
    if k == 1:
        return (Leaf(0, 0, 1),)
    out = []
    for a in range(1, k):
        for left in _shapes(a):
            for right in _shapes(k - a):
                out.append(Series(left, right))
                out.append(Parallel(left, right))
    return tuple(out)


def all_trees(leaves: int) -> Iterator[DecompTree]:
    """Every ordered tree with ``leaves`` leaves and every series/parallel labelling."""
    yield from _shapes(leaves)


def parallel_paths(k: int, length: int = 2) -> DecompTree:
    """``k`` directed paths of ``length`` arcs composed in parallel."""
    path: DecompTree = Leaf(0, 0, 1)
    for _ in range(length - 1):
        path = Series(path, Leaf(0, 0, 1))
    tree = path
    for _ in range(k - 1):
        tree = Parallel(tree, path)
    return tree


def caterpillar(levels: int) -> DecompTree:
    """Deep tree whose parallel nodes all merge a long sequence with a short one.

    The carried sequences grow by one entry per level, so the solver does
    quadratic total work here; useful as a scaling stress case.
    """
    tree: DecompTree = Leaf(0, 0, 1)
    for _ in range(levels):
        tree = Parallel(Series(tree, Leaf(0, 0, 1)), Series(Leaf(0, 0, 1), Leaf(0, 0, 1)))
    return tree

"""Exhaustive reference implementations for testing and the ``verify`` command.

Everything here enumerates: topological orders by backtracking over the
zero-indegree frontier, merge-matrix paths by depth-first search. Hard size
bounds turn accidental blowups into :class:`OracleBoundError`.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

from .intseq import as_seq, dominates
from .mergedom import GridPath
from .spdigraph import CyclicGraphError, Digraph

MAX_ORDER_VERTICES = 10
MAX_MERGE_SIZE = 14


class OracleBoundError(ValueError):
    pass


def enumerate_topological_orders(g: Digraph, max_vertices: int = MAX_ORDER_VERTICES) -> Iterator[list[int]]:
    """Every topological order of ``g`` exactly once, as vertex lists."""
    if g.n > max_vertices:
        raise OracleBoundError(f"{g.n} vertices exceeds the oracle bound {max_vertices}")
    if not g.is_acyclic():
        raise CyclicGraphError("graph contains a directed cycle")
    indeg = [0] * (g.n + 1)
    succ: list[list[int]] = [[] for _ in range(g.n + 1)]
    for u, v, _ in g.arcs:
        indeg[v] += 1
        succ[u].append(v)
    order: list[int] = []

    def extend() -> Iterator[list[int]]:
        if len(order) == g.n:
            yield list(order)
            return
        for v in range(1, g.n + 1):
            if indeg[v] != 0 or v in placed:
                continue
            placed.add(v)
            order.append(v)
            for w in succ[v]:
                indeg[w] -= 1
            yield from extend()
            for w in succ[v]:
                indeg[w] += 1
            order.pop()
            placed.discard(v)

    placed: set[int] = set()
    yield from extend()


def _cuts(g: Digraph, order: Sequence[int]) -> list[int]:
    pos = {v: i for i, v in enumerate(order, 1)}
    return [
        sum(w for u, v, w in g.arcs if pos[u] <= i < pos[v])
        for i in range(1, g.n)
    ]


def _vertex_crossings(g: Digraph, order: Sequence[int]) -> list[int]:
    pos = {v: i for i, v in enumerate(order, 1)}
    return [
        sum(1 for u, v, _ in g.arcs if pos[u] < i < pos[v])
        for i in range(1, g.n + 1)
    ]


def brute_weighted_cutwidth(g: Digraph, max_vertices: int = MAX_ORDER_VERTICES) -> tuple[int, list[int]]:
    best: tuple[int, list[int]] | None = None
    for order in enumerate_topological_orders(g, max_vertices):
        value = max(_cuts(g, order), default=0)
        if best is None or value < best[0]:
            best = (value, order)
    assert best is not None
    return best


def brute_cutwidth(g: Digraph, max_vertices: int = MAX_ORDER_VERTICES) -> tuple[int, list[int]]:
    return brute_weighted_cutwidth(g.with_unit_weights(), max_vertices)


def brute_modified_cutwidth(g: Digraph, max_vertices: int = MAX_ORDER_VERTICES) -> tuple[int, list[int]]:
    best: tuple[int, list[int]] | None = None
    for order in enumerate_topological_orders(g, max_vertices):
        value = max(_vertex_crossings(g, order), default=0)
        if best is None or value < best[0]:
            best = (value, order)
    assert best is not None
    return best


def delannoy(a: int, b: int) -> int:
    """Number of lattice walks from (0, 0) to (a, b) with steps E, N, NE."""
    return sum(comb(a, k) * comb(b, k) * 2**k for k in range(min(a, b) + 1))


@lru_cache(maxsize=None)
def _grid_paths(m: int, n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    out = []
    path = [(1, 1)]

    def walk() -> None:
        i, j = path[-1]
        if (i, j) == (m, n):
            out.append(tuple(path))
            return
        for di, dj in ((1, 0), (0, 1), (1, 1)):
            if i + di <= m and j + dj <= n:
                path.append((i + di, j + dj))
                walk()
                path.pop()

    walk()
    return tuple(out)


def enumerate_merges(r: Sequence[int], c: Sequence[int], max_size: int = MAX_MERGE_SIZE) -> Iterator[GridPath]:
    """Every path of the ``len(r) x len(c)`` merge matrix, diagonal steps included."""
    m, n = len(as_seq(r)), len(as_seq(c))
    if m + n > max_size:
        raise OracleBoundError(f"{m}+{n} exceeds the merge oracle bound {max_size}")
    for steps in _grid_paths(m, n):
        yield GridPath.from_steps(steps)


def brute_dominating_check(r: Sequence[int], c: Sequence[int], candidate: GridPath | Sequence[int]) -> bool:
    """Does ``candidate`` (a path or a value sequence) dominate every merge of ``r`` and ``c``?"""
    r, c = as_seq(r), as_seq(c)
    m, n = len(r), len(c)
    if m + n > MAX_MERGE_SIZE:
        raise OracleBoundError(f"{m}+{n} exceeds the merge oracle bound {MAX_MERGE_SIZE}")
    if isinstance(candidate, GridPath):
        cand = tuple(r[i - 1] + c[j - 1] for i, j in candidate)
    else:
        cand = as_seq(candidate)
    distinct = {tuple(r[i - 1] + c[j - 1] for i, j in steps) for steps in _grid_paths(m, n)}
    return all(dominates(cand, q) for q in distinct)

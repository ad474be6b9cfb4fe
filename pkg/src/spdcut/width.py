"""Cut-size sequences and exact width solvers for series parallel digraphs.

The solvers run a bottom-up pass over a decomposition tree and keep one
topological order per node whose cut-size sequence dominates those of all
other orders of that node's subgraph: series nodes concatenate, parallel
nodes interleave along a dominating merge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .intseq import IntSeq
from .mergedom import GridPath, MergeContext, merge_dominator, path_values
from .spdigraph import (
    DecompTree,
    Digraph,
    Leaf,
    Series,
    check_tree_labels,
    fold,
    is_topological_order,
    leaves,
    recognize_spd,
    subdivide_tree,
    validate_tree,
)


class NotTopologicalError(ValueError):
    pass


class InvariantError(AssertionError):
    """Raised by the checked DP when a node's carried sequence is wrong."""


class WidthResult(NamedTuple):
    value: int
    order: list[int]


def _positions(g: Digraph, order: Sequence[int]) -> list[int]:
    if not is_topological_order(g, order):
        raise NotTopologicalError("order is not topological for this graph")
    pos = [0] * (g.n + 1)
    for i, v in enumerate(order, 1):
        pos[v] = i
    return pos


def cut_size_sequence(g: Digraph, order: Sequence[int]) -> IntSeq:
    """Total arc weight crossing each of the ``n - 1`` gaps of ``order``."""
    pos = _positions(g, order)
    diff = [0] * (g.n + 1)
    for u, v, w in g.arcs:
        diff[pos[u]] += w
        diff[pos[v]] -= w
    out = []
    running = 0
    for i in range(1, g.n):
        running += diff[i]
        out.append(running)
    return tuple(out)


def cutwidth_of_order(g: Digraph, order: Sequence[int]) -> int:
    """Weighted cutwidth of ``order``; plain cutwidth when all weights are 1."""
    return max(cut_size_sequence(g, order), default=0)


def modified_cutwidth_of_order(g: Digraph, order: Sequence[int]) -> int:
    """Largest number of arcs jumping strictly over a single vertex (weights ignored)."""
    pos = _positions(g, order)
    diff = [0] * (g.n + 2)
    for u, v, _ in g.arcs:
        if pos[v] - pos[u] >= 2:
            diff[pos[u] + 1] += 1
            diff[pos[v]] -= 1
    best = running = 0
    for i in range(1, g.n + 1):
        running += diff[i]
        best = max(best, running)
    return best


def interleave_orders(order1: Sequence[int], order2: Sequence[int], p: GridPath) -> list[int]:
    """Topological order of a parallel composition following the merge path ``p``.

    ``order1`` and ``order2`` share their first (source) and last (sink)
    vertex. A row step of ``p`` places the next inner vertex of ``order1``, a
    column step the next inner vertex of ``order2``.
    """
    if order1[0] != order2[0] or order1[-1] != order2[-1]:
        raise ValueError("orders must share source and sink")
    if len(p) != len(order1) + len(order2) - 3:
        raise ValueError("path length does not match the orders")
    p.validate(len(order1) - 1, len(order2) - 1)
    out = [order1[0]]
    rows, cols = p.rows, p.cols
    for k in range(1, len(rows)):
        if rows[k] != rows[k - 1]:
            if cols[k] != cols[k - 1]:
                raise ValueError("diagonal step in merge path")
            out.append(order1[rows[k - 1]])
        else:
            out.append(order2[cols[k - 1]])
    out.append(order1[-1])
    return out


@dataclass
class _Partial:
    order: list[int]
    seq: IntSeq
    arcs: list[tuple[int, int, int]] | None = None


def _check_partial(part: _Partial) -> None:
    assert part.arcs is not None
    label = {v: i for i, v in enumerate(part.order, 1)}
    sub = Digraph(len(label), tuple((label[u], label[v], w) for u, v, w in part.arcs))
    seq = cut_size_sequence(sub, range(1, len(label) + 1))
    if seq != part.seq:
        raise InvariantError(f"carried sequence {part.seq} != recomputed {seq}")


def _dominant_order(tree: DecompTree, check: bool = False) -> _Partial:
    def leaf(lf: Leaf) -> _Partial:
        return _Partial([lf.tail, lf.head], (lf.weight,), [(lf.tail, lf.head, lf.weight)] if check else None)

    def inner(node, left: _Partial, right: _Partial) -> _Partial:
        if isinstance(node, Series):
            part = _Partial(left.order + right.order[1:], left.seq + right.seq)
        else:
            p = merge_dominator(left.seq, right.seq)
            seq = path_values(MergeContext(left.seq, right.seq), p)
            part = _Partial(interleave_orders(left.order, right.order, p), seq)
        if check:
            part.arcs = left.arcs + right.arcs
            _check_partial(part)
        return part

    return fold(tree, leaf, inner)


def _tree_for(g: Digraph, tree: DecompTree | None) -> DecompTree:
    if tree is None:
        return recognize_spd(g)
    validate_tree(g, tree)
    return tree


def spd_weighted_cutwidth(g: Digraph, tree: DecompTree | None = None, check: bool = False) -> WidthResult:
    """Weighted cutwidth of a series parallel digraph and an order attaining it.

    ``tree`` must yield ``g`` on ``g``'s own labels; it is recognised when
    omitted. ``check`` recomputes every node's cut-size sequence from scratch.
    """
    tree = _tree_for(g, tree)
    tree, _ = subdivide_tree(tree, g.n)
    part = _dominant_order(tree, check)
    order = [v for v in part.order if v <= g.n]
    return WidthResult(max(part.seq), order)


def _unit_tree(tree: DecompTree) -> DecompTree:
    return fold(tree, lambda lf: Leaf(lf.tail, lf.head, 1), lambda node, a, b: type(node)(a, b))


def spd_cutwidth(g: Digraph, tree: DecompTree | None = None, check: bool = False) -> WidthResult:
    """Cutwidth (unit weights) of a series parallel digraph."""
    tree = _tree_for(g, tree)
    return spd_weighted_cutwidth(g.with_unit_weights(), _unit_tree(tree), check)


@dataclass(frozen=True)
class McwInstance:
    """Weighted digraph whose weighted cutwidth encodes the modified cutwidth.

    Every inner vertex ``v`` is split into ``v_in -> v_out`` of weight
    ``m + 1``; each original arc ``(v, w)`` becomes ``(v_out, w_in)`` of
    weight 1. The source is kept only as an out-vertex, the sink only as an
    in-vertex.
    """

    graph: Digraph
    tree: DecompTree
    m: int
    v_in: dict[int, int]
    v_out: dict[int, int]


def mcw_transform(g: Digraph, tree: DecompTree | None = None) -> McwInstance:
    tree = _tree_for(g, tree)
    s, t = check_tree_labels(tree)
    m = g.m
    v_in: dict[int, int] = {}
    v_out: dict[int, int] = {}
    label = 0
    for v in g.vertices():
        if v != t:
            label += 1
            if v != s:
                v_in[v] = label
                label += 1
            v_out[v] = label
        else:
            label += 1
            v_in[v] = label

    def leaf(lf: Leaf) -> tuple[DecompTree, int, int]:
        return Leaf(v_out[lf.tail], v_in[lf.head], 1), lf.tail, lf.head

    def inner(node, left, right):
        (lt, ls, lx), (rt, _, rh) = left, right
        if isinstance(node, Series):
            split = Leaf(v_in[lx], v_out[lx], m + 1)
            return Series(Series(lt, split), rt), ls, rh
        return type(node)(lt, rt), ls, lx

    new_tree, _, _ = fold(tree, leaf, inner)
    arcs = tuple((lf.tail, lf.head, lf.weight) for lf in leaves(new_tree))
    graph = Digraph(label, arcs, (v_out[s], v_in[t]))
    return McwInstance(graph, new_tree, m, v_in, v_out)


class McwResult(NamedTuple):
    value: int
    order: list[int]
    weighted_value: int
    m: int


def solve_modified_cutwidth(g: Digraph, tree: DecompTree | None = None, check: bool = False) -> McwResult:
    """Modified cutwidth via the weighted cutwidth of :func:`mcw_transform`.

    Arc weights of ``g`` are ignored. With at least one inner vertex the
    weighted optimum is exactly ``mcw + m + 1``; a two-vertex graph has
    modified cutwidth 0.
    """
    g = g.with_unit_weights()
    tree = _tree_for(g, None if tree is None else _unit_tree(tree))
    inst = mcw_transform(g, tree)
    weighted, order_t = spd_weighted_cutwidth(inst.graph, inst.tree, check)
    s, t = g.st()
    if g.n == 2:
        return McwResult(0, [s, t], weighted, inst.m)
    pos = {v: i for i, v in enumerate(order_t)}
    inner_vertices = sorted((v for v in g.vertices() if v not in (s, t)), key=lambda v: pos[inst.v_in[v]])
    return McwResult(weighted - inst.m - 1, [s, *inner_vertices, t], weighted, inst.m)


def spd_modified_cutwidth(g: Digraph, tree: DecompTree | None = None, check: bool = False) -> WidthResult:
    res = solve_modified_cutwidth(g, tree, check)
    return WidthResult(res.value, res.order)

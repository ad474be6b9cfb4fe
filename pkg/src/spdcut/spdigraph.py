"""Two-terminal multidigraphs, series/parallel composition and recognition."""

from __future__ import annotations

import re
from collections import Counter, defaultdict, deque
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Sequence, TypeVar, Union

Arc = tuple[int, int, int]  # (tail, head, weight)
T = TypeVar("T")


class GraphFormatError(ValueError):
    pass


class CyclicGraphError(ValueError):
    pass


class TerminalError(ValueError):
    pass


class NotSeriesParallelError(ValueError):
    pass


@dataclass(frozen=True)
class Digraph:
    """Multidigraph on vertices ``1..n`` with positive integer arc weights.

    ``terminals`` may be left as ``None``; it is then inferred as the unique
    source and the unique sink (see :meth:`st`).
    """

    n: int
    arcs: tuple[Arc, ...]
    terminals: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        arcs = tuple((int(u), int(v), int(w)) for u, v, w in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        for u, v, w in arcs:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"arc ({u},{v}) outside vertex range 1..{self.n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if w < 1:
                raise ValueError(f"arc ({u},{v}) has non-positive weight {w}")
        if self.terminals is not None:
            s, t = self.terminals
            if not (1 <= s <= self.n and 1 <= t <= self.n) or s == t:
                raise TerminalError(f"invalid terminals {self.terminals}")

    @classmethod
    def from_arcs(cls, arcs: Iterable[Sequence[int]], n: int | None = None,
                  terminals: tuple[int, int] | None = None) -> Digraph:
        """Build from ``(u, v)`` or ``(u, v, w)`` tuples; weight defaults to 1."""
        full = [(a[0], a[1], a[2] if len(a) > 2 else 1) for a in arcs]
        if n is None:
            n = max((max(u, v) for u, v, _ in full), default=0)
        return cls(n, tuple(full), terminals)

    @property
    def m(self) -> int:
        return len(self.arcs)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def with_unit_weights(self) -> Digraph:
        return Digraph(self.n, tuple((u, v, 1) for u, v, _ in self.arcs), self.terminals)

    def arc_multiset(self) -> Counter:
        return Counter(self.arcs)

    def is_simple(self) -> bool:
        pairs = [(u, v) for u, v, _ in self.arcs]
        return len(pairs) == len(set(pairs))

    def is_acyclic(self) -> bool:
        return topological_sort(self) is not None

    def st(self) -> tuple[int, int]:
        """Terminals, inferred as the unique source and sink when not given."""
        if self.terminals is not None:
            return self.terminals
        indeg = Counter(v for _, v, _ in self.arcs)
        outdeg = Counter(u for u, _, _ in self.arcs)
        sources = [v for v in self.vertices() if indeg[v] == 0]
        sinks = [v for v in self.vertices() if outdeg[v] == 0]
        if len(sources) != 1 or len(sinks) != 1 or sources == sinks:
            raise TerminalError(
                f"terminals not inferable: sources {sources[:5]}, sinks {sinks[:5]}"
            )
        return sources[0], sinks[0]


def topological_sort(g: Digraph) -> list[int] | None:
    """Kahn's algorithm; ``None`` if ``g`` has a cycle."""
    indeg = [0] * (g.n + 1)
    out: list[list[int]] = [[] for _ in range(g.n + 1)]
    for u, v, _ in g.arcs:
        indeg[v] += 1
        out[u].append(v)
    queue = deque(v for v in g.vertices() if indeg[v] == 0)
    order = []
    while queue:
        u = queue.popleft()
        order.append(u)
        for v in out[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                queue.append(v)
    return order if len(order) == g.n else None


def is_topological_order(g: Digraph, order: Sequence[int]) -> bool:
    """``order`` lists the vertices by position; checks every arc points forward."""
    if sorted(order) != list(g.vertices()):
        raise ValueError("order is not a permutation of the vertices")
    pos = {v: i for i, v in enumerate(order)}
    return all(pos[u] < pos[v] for u, v, _ in g.arcs)


# -- composition ---------------------------------------------------------------


def single_arc(weight: int = 1) -> Digraph:
    return Digraph(2, ((1, 2, weight),), (1, 2))


def compose_series(g1: Digraph, g2: Digraph) -> Digraph:
    """Identify the sink of ``g1`` with the source of ``g2``.

    ``g1`` keeps its labels; the other vertices of ``g2`` are appended in
    increasing label order.
    """
    s1, t1 = g1.st()
    s2, t2 = g2.st()
    relabel = {s2: t1}
    nxt = g1.n + 1
    for v in g2.vertices():
        if v != s2:
            relabel[v] = nxt
            nxt += 1
    arcs = g1.arcs + tuple((relabel[u], relabel[v], w) for u, v, w in g2.arcs)
    return Digraph(nxt - 1, arcs, (s1, relabel[t2]))


def compose_parallel(g1: Digraph, g2: Digraph) -> Digraph:
    """Identify the sources and the sinks of ``g1`` and ``g2``."""
    s1, t1 = g1.st()
    s2, t2 = g2.st()
    relabel = {s2: s1, t2: t1}
    nxt = g1.n + 1
    for v in g2.vertices():
        if v not in relabel:
            relabel[v] = nxt
            nxt += 1
    arcs = g1.arcs + tuple((relabel[u], relabel[v], w) for u, v, w in g2.arcs)
    return Digraph(nxt - 1, arcs, (s1, t1))


# -- decomposition trees -------------------------------------------------------


@dataclass(frozen=True)
class Leaf:
    tail: int
    head: int
    weight: int = 1


@dataclass(frozen=True)
class Series:
    left: "DecompTree"
    right: "DecompTree"


@dataclass(frozen=True)
class Parallel:
    left: "DecompTree"
    right: "DecompTree"


DecompTree = Union[Leaf, Series, Parallel]


def fold(
    tree: DecompTree,
    leaf: Callable[[Leaf], T],
    inner: Callable[[Series | Parallel, T, T], T],
) -> T:
    """Bottom-up evaluation without recursion; leaves are visited left to right.

    Works on trees that share subtree objects, since nothing is keyed by
    node identity.
    """
    results: list[T] = []
    stack: list[tuple[DecompTree, bool]] = [(tree, False)]
    while stack:
        node, expanded = stack.pop()
        if isinstance(node, Leaf):
            results.append(leaf(node))
        elif expanded:
            right = results.pop()
            left = results.pop()
            results.append(inner(node, left, right))
        else:
            stack.append((node, True))
            stack.append((node.right, False))
            stack.append((node.left, False))
    return results[0]


def leaves(tree: DecompTree) -> list[Leaf]:
    out: list[Leaf] = []
    stack = [tree]
    while stack:
        node = stack.pop()
        if isinstance(node, Leaf):
            out.append(node)
        else:
            stack.append(node.right)
            stack.append(node.left)
    return out


def count_leaves(tree: DecompTree) -> int:
    return len(leaves(tree))


def check_tree_labels(tree: DecompTree) -> tuple[int, int]:
    """Verify leaf labels are consistent with the series/parallel structure.

    Returns the terminals of ``tree``.
    """

    def leaf(node: Leaf) -> tuple[int, int]:
        if node.weight < 1:
            raise ValueError(f"leaf {node} has non-positive weight")
        if node.tail == node.head:
            raise ValueError(f"leaf {node} is a self-loop")
        return node.tail, node.head

    def inner(node, left, right):
        (s1, t1), (s2, t2) = left, right
        if isinstance(node, Series):
            if t1 != s2:
                raise ValueError(f"series node joins {t1} to {s2}")
            return s1, t2
        if (s1, t1) != (s2, t2):
            raise ValueError(f"parallel node joins ({s1},{t1}) with ({s2},{t2})")
        return s1, t1

    return fold(tree, leaf, inner)


def realize(tree: DecompTree) -> tuple[Digraph, DecompTree]:
    """Label the tree's vertices freshly and return the yielded digraph and the
    relabelled tree. Leaf labels of the input are ignored; only shape and
    weights matter.

    The source gets label 1, the sink label 2, and series nodes number their
    middle vertex from 3 in preorder.
    """
    nxt = 3
    arcs: list[Arc] = []
    results: list[DecompTree] = []
    stack: list[tuple[DecompTree, int, int, bool]] = [(tree, 1, 2, False)]
    while stack:
        node, s, t, expanded = stack.pop()
        if isinstance(node, Leaf):
            arcs.append((s, t, node.weight))
            results.append(Leaf(s, t, node.weight))
        elif expanded:
            right = results.pop()
            left = results.pop()
            results.append(type(node)(left, right))
        else:
            stack.append((node, s, t, True))
            if isinstance(node, Series):
                x = nxt
                nxt += 1
                stack.append((node.right, x, t, False))
                stack.append((node.left, s, x, False))
            else:
                stack.append((node.right, s, t, False))
                stack.append((node.left, s, t, False))
    return Digraph(nxt - 1, tuple(arcs), (1, 2)), results[0]


def evaluate_tree(tree: DecompTree) -> Digraph:
    """The series parallel digraph yielded by ``tree``."""
    return realize(tree)[0]


def tree_digraph(tree: DecompTree, n: int | None = None) -> Digraph:
    """Digraph on the tree's own leaf labels."""
    s, t = check_tree_labels(tree)
    arcs = tuple((lf.tail, lf.head, lf.weight) for lf in leaves(tree))
    if n is None:
        n = max(max(u, v) for u, v, _ in arcs)
    return Digraph(n, arcs, (s, t))


def fold_compose(tree: DecompTree) -> Digraph:
    """Yielded digraph built with :func:`compose_series` / :func:`compose_parallel`."""
    return fold(
        tree,
        lambda lf: single_arc(lf.weight),
        lambda node, g1, g2: (
            compose_series(g1, g2) if isinstance(node, Series) else compose_parallel(g1, g2)
        ),
    )


def validate_tree(g: Digraph, tree: DecompTree) -> None:
    """Raise ``ValueError`` unless ``tree`` yields exactly ``g`` on ``g``'s labels."""
    s, t = check_tree_labels(tree)
    if (s, t) != g.st():
        raise ValueError(f"tree terminals {(s, t)} differ from graph terminals {g.st()}")
    tree_arcs = Counter((lf.tail, lf.head, lf.weight) for lf in leaves(tree))
    if tree_arcs != g.arc_multiset():
        raise ValueError("tree does not yield the graph's arc multiset")
    touched = {v for u, w, _ in g.arcs for v in (u, w)}
    if len(touched) != g.n:
        raise ValueError("graph has isolated vertices")


# -- recognition ---------------------------------------------------------------


def recognize_spd(g: Digraph) -> DecompTree:
    """Decomposition tree of ``g`` by exhaustive series and parallel reductions.

    Raises :class:`CyclicGraphError` for cyclic input, :class:`TerminalError`
    if the terminals are missing or not inferable, and
    :class:`NotSeriesParallelError` if the reductions get stuck.
    """
    if g.n < 2:
        raise TerminalError("a series parallel digraph needs at least two vertices")
    if not g.is_acyclic():
        raise CyclicGraphError("graph contains a directed cycle")
    s, t = g.st()

    arcs: dict[int, tuple[int, int, DecompTree]] = {}
    out_arcs: dict[int, set[int]] = defaultdict(set)
    in_arcs: dict[int, set[int]] = defaultdict(set)
    for k, (u, v, w) in enumerate(g.arcs):
        arcs[k] = (u, v, Leaf(u, v, w))
        out_arcs[u].add(k)
        in_arcs[v].add(k)
    next_id = len(g.arcs)

    def add_arc(u: int, v: int, tree: DecompTree) -> None:
        nonlocal next_id
        arcs[next_id] = (u, v, tree)
        out_arcs[u].add(next_id)
        in_arcs[v].add(next_id)
        next_id += 1

    def remove_arc(k: int) -> tuple[int, int, DecompTree]:
        u, v, tree = arcs.pop(k)
        out_arcs[u].discard(k)
        in_arcs[v].discard(k)
        return u, v, tree

    def merge_parallel(x: int) -> None:
        groups: dict[tuple[int, int], list[int]] = defaultdict(list)
        for k in sorted(out_arcs[x] | in_arcs[x]):
            groups[arcs[k][:2]].append(k)
        for (u, v), ks in groups.items():
            if len(ks) < 2:
                continue
            tree = remove_arc(ks[0])[2]
            for k in ks[1:]:
                tree = Parallel(tree, remove_arc(k)[2])
            add_arc(u, v, tree)

    alive = set(g.vertices())
    pending = deque(sorted(alive))
    queued = set(pending)
    while pending:
        x = pending.popleft()
        queued.discard(x)
        if x not in alive:
            continue
        merge_parallel(x)
        if x in (s, t) or len(in_arcs[x]) != 1 or len(out_arcs[x]) != 1:
            continue
        (ka,) = in_arcs[x]
        (kb,) = out_arcs[x]
        u, _, left = remove_arc(ka)
        _, v, right = remove_arc(kb)
        alive.discard(x)
        add_arc(u, v, Series(left, right))
        for y in (u, v):
            if y not in queued:
                pending.append(y)
                queued.add(y)
    merge_parallel(s)
    if alive != {s, t} or len(arcs) != 1:
        raise NotSeriesParallelError("reductions stop before a single arc remains")
    ((u, v, tree),) = arcs.values()
    if (u, v) != (s, t):
        raise NotSeriesParallelError("remaining arc does not join the terminals")
    return tree


# -- preprocessing -------------------------------------------------------------


def subdivide_parallel_arcs(g: Digraph) -> Digraph:
    """Replace every repeated ``(u, v)`` arc except the first by ``u -> z -> v``.

    Both new arcs keep the weight of the arc they replace. New vertices are
    numbered from ``n + 1`` in arc order.
    """
    seen: set[tuple[int, int]] = set()
    arcs: list[Arc] = []
    n = g.n
    for u, v, w in g.arcs:
        if (u, v) in seen:
            n += 1
            arcs.append((u, n, w))
            arcs.append((n, v, w))
        else:
            seen.add((u, v))
            arcs.append((u, v, w))
    return Digraph(n, tuple(arcs), g.st() if g.n >= 2 else g.terminals)


def subdivide_tree(tree: DecompTree, n: int) -> tuple[DecompTree, int]:
    """Tree counterpart of :func:`subdivide_parallel_arcs`.

    Leaves are visited left to right; every leaf repeating an earlier
    ``(tail, head)`` pair becomes a series node through a fresh vertex
    numbered from ``n + 1``. Returns the new tree and the new vertex count.
    """
    seen: set[tuple[int, int]] = set()
    count = n

    def leaf(node: Leaf) -> DecompTree:
        nonlocal count
        key = (node.tail, node.head)
        if key not in seen:
            seen.add(key)
            return node
        count += 1
        return Series(Leaf(node.tail, count, node.weight), Leaf(count, node.head, node.weight))

    new = fold(tree, leaf, lambda node, left, right: type(node)(left, right))
    return new, count


# -- file formats --------------------------------------------------------------


def parse_graph(text: str) -> Digraph:
    """Parse the ``n m`` header plus ``u v [w]`` arc lines format."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphFormatError("missing 'n m' header")
    try:
        header = [int(x) for x in lines[0].split()]
    except ValueError as exc:
        raise GraphFormatError(f"bad header {lines[0]!r}") from exc
    if len(header) != 2 or header[0] < 0 or header[1] < 0:
        raise GraphFormatError(f"bad header {lines[0]!r}")
    n, m = header
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"expected {m} arc lines, found {len(body)}")
    arcs = []
    for ln in body:
        try:
            fields = [int(x) for x in ln.split()]
        except ValueError as exc:
            raise GraphFormatError(f"bad arc line {ln!r}") from exc
        if len(fields) not in (2, 3):
            raise GraphFormatError(f"bad arc line {ln!r}")
        u, v = fields[0], fields[1]
        w = fields[2] if len(fields) == 3 else 1
        if not (1 <= u <= n and 1 <= v <= n) or w < 1 or u == v:
            raise GraphFormatError(f"arc out of range or invalid: {ln!r}")
        arcs.append((u, v, w))
    return Digraph(n, tuple(arcs))


def read_graph(path: str | Path) -> Digraph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def format_graph(g: Digraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" if w == 1 else f"{u} {v} {w}" for u, v, w in g.arcs]
    return "\n".join(lines) + "\n"


def tree_to_sexpr(tree: DecompTree) -> str:
    return fold(
        tree,
        lambda lf: f"(a {lf.tail} {lf.head} {lf.weight})",
        lambda node, left, right: f"({'S' if isinstance(node, Series) else 'P'} {left} {right})",
    )


_TOKEN = re.compile(r"\(|\)|[^\s()]+")


def tree_from_sexpr(text: str) -> DecompTree:
    tokens = _TOKEN.findall(text)
    stack: list[list] = []
    result: DecompTree | None = None
    for tok in tokens:
        if tok == "(":
            stack.append([])
        elif tok == ")":
            if not stack:
                raise GraphFormatError("unbalanced ')'")
            items = stack.pop()
            node = _build_node(items)
            if stack:
                stack[-1].append(node)
            elif result is None:
                result = node
            else:
                raise GraphFormatError("trailing expression")
        else:
            if not stack:
                raise GraphFormatError(f"unexpected token {tok!r}")
            stack[-1].append(tok)
    if stack or result is None:
        raise GraphFormatError("unbalanced s-expression")
    return result


def _build_node(items: list) -> DecompTree:
    if not items or not isinstance(items[0], str):
        raise GraphFormatError("node without tag")
    tag, args = items[0], items[1:]
    if tag == "a":
        if len(args) != 3 or not all(isinstance(a, str) for a in args):
            raise GraphFormatError("leaf must be (a u v w)")
        try:
            u, v, w = (int(a) for a in args)
        except ValueError as exc:
            raise GraphFormatError("leaf fields must be integers") from exc
        return Leaf(u, v, w)
    if tag in ("S", "P"):
        if len(args) != 2 or any(isinstance(a, str) for a in args):
            raise GraphFormatError(f"({tag} L R) needs two subtrees")
        return (Series if tag == "S" else Parallel)(args[0], args[1])
    raise GraphFormatError(f"unknown tag {tag!r}")

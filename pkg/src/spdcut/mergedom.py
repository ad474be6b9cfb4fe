"""Dominating merges of two integer sequences.

A merge of ``r`` and ``c`` is read off a monotone path through the implicit
merge matrix ``M[i, j] = r(i) + c(j)``. The matrix is never built; every
entry is recomputed from the two sequences when needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .intseq import IntSeq, TypicalView, as_seq, canonical_argmin, is_typical, typical_sequence


class NotTypicalError(ValueError):
    def __init__(self) -> None:
        super().__init__("input not typical")


@dataclass(frozen=True)
class GridPath:
    """Monotone staircase of 1-based ``(row, col)`` cells, stored column-wise."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    @classmethod
    def from_steps(cls, steps: Iterable[tuple[int, int]]) -> GridPath:
        steps = list(steps)
        return cls(tuple(i for i, _ in steps), tuple(j for _, j in steps))

    @property
    def steps(self) -> list[tuple[int, int]]:
        return list(zip(self.rows, self.cols))

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return zip(self.rows, self.cols)

    def __str__(self) -> str:
        return " ".join(f"({i},{j})" for i, j in self)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows[-1], self.cols[-1]

    def is_nondiagonal(self) -> bool:
        return all(
            (a2 - a1) + (b2 - b1) == 1
            for a1, a2, b1, b2 in zip(self.rows, self.rows[1:], self.cols, self.cols[1:])
        )

    def validate(self, m: int, n: int) -> None:
        """Raise ``ValueError`` unless this is a path from (1, 1) to (m, n)."""
        if not self.rows or len(self.rows) != len(self.cols):
            raise ValueError("empty or ragged path")
        if (self.rows[0], self.cols[0]) != (1, 1) or (self.rows[-1], self.cols[-1]) != (m, n):
            raise ValueError(f"path must run from (1,1) to ({m},{n})")
        for a1, a2, b1, b2 in zip(self.rows, self.rows[1:], self.cols, self.cols[1:]):
            di, dj = a2 - a1, b2 - b1
            if (di, dj) not in ((1, 0), (0, 1), (1, 1)):
                raise ValueError(f"illegal step ({a1},{b1}) -> ({a2},{b2})")


@dataclass(frozen=True)
class MergeContext:
    """Row sequence ``r`` and column sequence ``c`` of an implicit merge matrix."""

    r: IntSeq
    c: IntSeq

    def __post_init__(self) -> None:
        object.__setattr__(self, "r", as_seq(self.r))
        object.__setattr__(self, "c", as_seq(self.c))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.r), len(self.c)

    def __getitem__(self, cell: tuple[int, int]) -> int:
        i, j = cell
        if not (1 <= i <= len(self.r) and 1 <= j <= len(self.c)):
            raise IndexError(f"cell ({i},{j}) outside {len(self.r)}x{len(self.c)} matrix")
        return self.r[i - 1] + self.c[j - 1]


def path_values(ctx: MergeContext, p: GridPath) -> IntSeq:
    """The sequence of matrix entries visited by ``p``."""
    m, n = ctx.shape
    if min(p.rows) < 1 or max(p.rows) > m or min(p.cols) < 1 or max(p.cols) > n:
        raise IndexError(f"path leaves the {m}x{n} matrix")
    r, c = ctx.r, ctx.c
    return tuple(r[i - 1] + c[j - 1] for i, j in zip(p.rows, p.cols))


def make_nondiagonal(ctx: MergeContext, p: GridPath) -> GridPath:
    """Split every diagonal step through the cheaper of its two corner cells.

    On ties the column step ``(i, j + 1)`` is used.
    """
    r, c = ctx.r, ctx.c
    rows = [p.rows[0]]
    cols = [p.cols[0]]
    for i2, j2 in zip(p.rows[1:], p.cols[1:]):
        i, j = rows[-1], cols[-1]
        if i2 == i + 1 and j2 == j + 1:
            if r[i - 1] + c[j] <= r[i] + c[j - 1]:
                rows.append(i)
                cols.append(j2)
            else:
                rows.append(i2)
                cols.append(j)
        rows.append(i2)
        cols.append(j2)
    return GridPath(tuple(rows), tuple(cols))


def _append(rows: list[int], cols: list[int], i: int, j: int) -> None:
    if not rows or rows[-1] != i or cols[-1] != j:
        rows.append(i)
        cols.append(j)


def _chop_bottom(r: Sequence[int], c: Sequence[int], m: int, n: int) -> tuple[list[int], list[int]]:
    """Dominating path of ``M[1..m, 1..n]`` whose last row and column are minimal."""
    # the walk runs backwards from (m, n); cells are collected in reverse
    t_rows: list[int] = []
    t_cols: list[int] = []
    a, b = m, n
    while a > 2 and b > 2:
        # r(a-2) + c(b-1) <= r(a-1) + c(b-2), 1-based
        if r[a - 3] + c[b - 2] <= r[a - 2] + c[b - 3]:
            t_rows += (a, a - 1)
            t_cols += (b, b)
            a -= 2
        else:
            t_rows += (a, a)
            t_cols += (b, b - 1)
            b -= 2
    if a <= 2:
        rows = [a] * b
        cols = list(range(1, b + 1))
    else:
        rows = list(range(1, a + 1))
        cols = [b] * a
    if (rows[0], cols[0]) != (1, 1):
        rows.insert(0, 1)
        cols.insert(0, 1)
    rows.extend(reversed(t_rows))
    cols.extend(reversed(t_cols))
    return rows, cols


def _chop_top(r: Sequence[int], c: Sequence[int], m: int, n: int) -> tuple[list[int], list[int]]:
    """Dominating path of ``M[1..m, 1..n]`` whose first row and column are minimal."""
    rows: list[int] = []
    cols: list[int] = []
    a, b = 1, 1
    while m - a > 1 and n - b > 1:
        # r(a+2) + c(b+1) <= r(a+1) + c(b+2), 1-based
        if r[a + 1] + c[b] <= r[a] + c[b + 1]:
            rows += (a, a + 1)
            cols += (b, b)
            a += 2
        else:
            rows += (a, a)
            cols += (b, b + 1)
            b += 2
    if m - a <= 1:
        rows.extend([a] * (n - b + 1))
        cols.extend(range(b, n + 1))
    else:
        rows.extend(range(a, m + 1))
        cols.extend([b] * (m - a + 1))
    _append(rows, cols, m, n)
    return rows, cols


def _split_and_chop(r: IntSeq, c: IntSeq) -> GridPath:
    m, n = len(r), len(c)
    i, j = canonical_argmin(r), canonical_argmin(c)
    rows, cols = _chop_bottom(r[:i], c[:j], i, j)
    top_rows, top_cols = _chop_top(r[i - 1 :], c[j - 1 :], m - i + 1, n - j + 1)
    # the top part starts at the split cell, which the bottom part already ends on
    rows.extend(a + i - 1 for a in top_rows[1:])
    cols.extend(b + j - 1 for b in top_cols[1:])
    return GridPath(tuple(rows), tuple(cols))


def split_and_chop(r: Sequence[int], c: Sequence[int]) -> GridPath:
    """Dominating path in the merge matrix of two typical sequences, in O(m + n)."""
    r, c = as_seq(r), as_seq(c)
    if not (is_typical(r) and is_typical(c)):
        raise NotTypicalError()
    return _split_and_chop(r, c)


def _check_view(s: IntSeq, view: TypicalView) -> None:
    idx = view.source_indices
    if len(idx) != len(view.values) or not idx or idx[0] != 1:
        raise ValueError("typical view does not match its sequence")
    for a, b in zip(idx, idx[1:]):
        if b <= a:
            raise ValueError("typical view indices must increase strictly")
    if idx[-1] > len(s) or any(s[k - 1] != v for k, v in zip(idx, view.values)):
        raise ValueError("typical view does not match its sequence")


def _lift_small(t: GridPath, r_idx: Sequence[int], c_idx: Sequence[int], m: int, n: int) -> GridPath:
    rows, cols = [1], [1]
    pi, pj = 1, 1
    for ti, tj in zip(t.rows[1:], t.cols[1:]):
        i, j = r_idx[ti - 1], c_idx[tj - 1]
        if i != pi:
            rows.extend(range(pi + 1, i + 1))
            cols.extend([j] * (i - pi))
        else:
            rows.extend([i] * (j - pj))
            cols.extend(range(pj + 1, j + 1))
        pi, pj = i, j
    rows.extend(range(pi + 1, m + 1))
    cols.extend([pj] * (m - pi))
    rows.extend([m] * (n - pj))
    cols.extend(range(pj + 1, n + 1))
    return GridPath(tuple(rows), tuple(cols))


def _lift(t: GridPath, r_idx: Sequence[int], c_idx: Sequence[int], m: int, n: int) -> GridPath:
    """Lift a non-diagonal path ``t`` through the index maps ``r_idx``/``c_idx``.

    Each step of ``t`` becomes a straight run in the full grid; the path is
    then padded to ``(m, n)`` with the trailing repetitions.
    """
    if m + n < 2048:  # numpy call overhead dominates below this
        return _lift_small(t, r_idx, c_idx, m, n)
    return _lift_array(t, r_idx, c_idx, m, n)


def _lift_array(t: GridPath, r_idx: Sequence[int], c_idx: Sequence[int], m: int, n: int) -> GridPath:
    ri = np.asarray(r_idx, dtype=np.int64)[np.asarray(t.rows) - 1]
    ci = np.asarray(c_idx, dtype=np.int64)[np.asarray(t.cols) - 1]
    # segment k moves down[k] rows, then right[k] columns; the last two
    # segments are the trailing repetitions (rows first, then columns)
    down = np.concatenate((np.diff(ri), [m - ri[-1], 0]))
    right = np.concatenate((np.diff(ci), [0, n - ci[-1]]))
    counts = np.column_stack((down, right)).ravel()
    is_row = np.repeat(np.tile([True, False], len(down)), counts)
    rows = np.concatenate(([1], 1 + np.cumsum(is_row)))
    cols = np.concatenate(([1], 1 + np.cumsum(~is_row)))
    return GridPath(tuple(rows.tolist()), tuple(cols.tolist()))


def typical_lift(
    t: GridPath,
    r: Sequence[int],
    c: Sequence[int],
    r_view: TypicalView | None = None,
    c_view: TypicalView | None = None,
) -> GridPath:
    """Expand a path over the typical grids of ``r`` and ``c`` into a non-diagonal
    path over the full ``len(r) x len(c)`` grid.
    """
    r, c = as_seq(r), as_seq(c)
    r_view = typical_sequence(r) if r_view is None else r_view
    c_view = typical_sequence(c) if c_view is None else c_view
    _check_view(r, r_view)
    _check_view(c, c_view)
    t.validate(len(r_view), len(c_view))
    t = make_nondiagonal(MergeContext(r_view.values, c_view.values), t)
    return _lift(t, r_view.source_indices, c_view.source_indices, len(r), len(c))


def merge_dominator(r: Sequence[int], c: Sequence[int]) -> GridPath:
    """Non-diagonal merge of ``r`` and ``c`` that dominates every merge of them."""
    r, c = as_seq(r), as_seq(c)
    r_view = typical_sequence(r)
    c_view = typical_sequence(c)
    # both views are typical by construction and the chop output has no diagonal steps
    t = _split_and_chop(r_view.values, c_view.values)
    return _lift(t, r_view.source_indices, c_view.source_indices, len(r), len(c))

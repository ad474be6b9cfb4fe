"""Integer sequences, typical sequences and the domination order.

Sequences are plain tuples of ints. Positions exposed to callers
(argmin/argmax, source indices of a typical sequence) are 1-based.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

IntSeq = tuple[int, ...]


class EmptySequenceError(ValueError):
    def __init__(self) -> None:
        super().__init__("empty sequence")


def as_seq(values: Iterable[int]) -> IntSeq:
    """Freeze ``values`` into an ``IntSeq``; rejects empty input."""
    if type(values) is tuple:
        seq = values
    else:
        seq = tuple(map(int, values))
    if not seq:
        raise EmptySequenceError()
    return seq


def parse_seq(text: str) -> IntSeq:
    """Parse the comma separated literal used on the command line, e.g. ``3,1,4``."""
    parts = [p.strip() for p in text.split(",")]
    if any(p == "" for p in parts):
        raise ValueError(f"malformed sequence literal: {text!r}")
    return as_seq(int(p) for p in parts)


def format_seq(s: Sequence[int]) -> str:
    return ",".join(str(v) for v in s)


@dataclass(frozen=True)
class TypicalView:
    """A typical sequence together with the positions it was read from."""

    values: IntSeq
    source_indices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.values)


def canonical_argmin(s: Sequence[int]) -> int:
    if not s:
        raise EmptySequenceError()
    return s.index(min(s)) + 1


def canonical_argmax(s: Sequence[int]) -> int:
    if not s:
        raise EmptySequenceError()
    return s.index(max(s)) + 1


def _prefix_marks(s: Sequence[int], end: int) -> list[int]:
    """Marking scan over ``s[0..end]`` (0-based, inclusive).

    ``end`` is the first position holding the global min or max, and ``s`` has
    no consecutive repetitions. Returns the marked positions, which induce the
    typical sequence of ``s`` restricted to ``[0..end]``.
    """
    if end == 0:
        return [0]
    if s[1] < s[0]:
        j_min, j_max = 1, 0
    else:
        j_min, j_max = 0, 1
    marks = [0]
    lo, hi = s[j_min], s[j_max]
    for j in range(2, end + 1):
        v = s[j]
        if v < lo:
            marks.append(j_max)
            j_min, lo = j, v
        elif v > hi:
            marks.append(j_min)
            j_max, hi = j, v
    marks.append(j_min)
    marks.append(j_max)
    return marks


def _prefix_marks_array(d: np.ndarray, end: int) -> np.ndarray:
    """Vectorised :func:`_prefix_marks`.

    A new strict running minimum at ``j`` marks the first position of the
    running maximum just before ``j``, and symmetrically for a new maximum.
    """
    if end == 0:
        return np.zeros(1, dtype=np.int64)
    a = d[: end + 1]
    pos = np.arange(end + 1)
    run_lo = np.minimum.accumulate(a)
    run_hi = np.maximum.accumulate(a)
    lo_rec = np.empty(end + 1, dtype=bool)
    hi_rec = np.empty(end + 1, dtype=bool)
    lo_rec[0] = hi_rec[0] = True
    lo_rec[1:] = a[1:] < run_lo[:-1]
    hi_rec[1:] = a[1:] > run_hi[:-1]
    at_lo = np.maximum.accumulate(np.where(lo_rec, pos, 0))
    at_hi = np.maximum.accumulate(np.where(hi_rec, pos, 0))
    return np.concatenate((
        [0],
        at_hi[:-1][lo_rec[1:]],
        at_lo[:-1][hi_rec[1:]],
        [at_lo[end], at_hi[end]],
    ))


def _typical_long(s: Sequence[int]) -> TypicalView:
    arr = np.asarray(s, dtype=np.int64)
    keep = np.concatenate(([0], np.flatnonzero(arr[1:] != arr[:-1]) + 1))
    d = arr[keep]
    n = len(d)
    if n == 1:
        return TypicalView((int(d[0]),), (1,))
    lo_mask, hi_mask = d == d.min(), d == d.max()
    first_lo, first_hi = int(lo_mask.argmax()), int(hi_mask.argmax())
    last_lo = n - 1 - int(lo_mask[::-1].argmax())
    last_hi = n - 1 - int(hi_mask[::-1].argmax())
    i_star, k_star = min(first_lo, first_hi), max(last_lo, last_hi)
    starts_low, ends_low = i_star == first_lo, k_star == last_lo
    extra = [i_star, k_star]
    if starts_low and ends_low:
        extra.append(first_hi)
    elif not starts_low and not ends_low:
        extra.append(first_lo)
    marks = np.concatenate((
        _prefix_marks_array(d, i_star),
        n - 1 - _prefix_marks_array(d[::-1], n - 1 - k_star),
        extra,
    ))
    positions = np.unique(marks)
    return TypicalView(tuple(d[positions].tolist()), tuple((keep[positions] + 1).tolist()))


def typical_sequence(s: Sequence[int]) -> TypicalView:
    """Typical sequence of ``s`` in linear time, with witnessing positions."""
    if len(s) == 0:
        raise EmptySequenceError()
    if len(s) > 256:
        return _typical_long(s)
    # drop consecutive repetitions, keeping the first position of every run
    keep = [0]
    keep.extend(i for i, (a, b) in enumerate(zip(s, s[1:]), 1) if a != b)
    d = [s[i] for i in keep]
    n = len(d)
    if n == 1:
        return TypicalView((d[0],), (keep[0] + 1,))

    lo, hi = min(d), max(d)
    first_lo, first_hi = d.index(lo), d.index(hi)
    last_lo = n - 1 - d[::-1].index(lo)
    last_hi = n - 1 - d[::-1].index(hi)
    i_star = min(first_lo, first_hi)
    k_star = max(last_lo, last_hi)

    marked = set(_prefix_marks(d, i_star))
    rev = d[::-1]
    marked.update(n - 1 - j for j in _prefix_marks(rev, n - 1 - k_star))

    starts_low = d[i_star] == lo
    ends_low = d[k_star] == lo
    if starts_low and ends_low:
        marked.add(first_hi)
    elif not starts_low and not ends_low:
        marked.add(first_lo)
    marked.add(i_star)
    marked.add(k_star)

    positions = sorted(marked)
    return TypicalView(
        tuple(d[j] for j in positions),
        tuple(keep[j] + 1 for j in positions),
    )


def _find_typical_op(s: Sequence[int]) -> tuple[int, int] | None:
    """Leftmost ``i`` (then widest ``j``) such that the typical operation applies."""
    n = len(s)
    for i in range(n - 2):
        lo = hi = s[i]
        best = None
        for j in range(i + 1, n):
            v = s[j]
            lo = min(lo, v)
            hi = max(hi, v)
            up = s[i] == lo
            down = s[i] == hi
            if not (up or down):
                break
            if j - i >= 2 and ((up and v == hi) or (down and v == lo)):
                best = j
        if best is not None:
            return i, best
    return None


def _find_repetition(s: Sequence[int]) -> int | None:
    for i in range(len(s) - 1):
        if s[i] == s[i + 1]:
            return i
    return None


def typical_sequence_naive(s: Sequence[int]) -> IntSeq:
    """Exhaustive reduction to the typical sequence; quadratic or worse, oracle only.

    Repetition removal is applied before the typical operation, leftmost
    first, restarting the scan after every change.
    """
    cur = list(as_seq(s))
    while True:
        i = _find_repetition(cur)
        if i is not None:
            del cur[i + 1]
            continue
        op = _find_typical_op(cur)
        if op is None:
            return tuple(cur)
        i, j = op
        del cur[i + 1 : j]


def typical_sequence_randomized(s: Sequence[int], rng: random.Random) -> IntSeq:
    """Exhaustive reduction applying a uniformly chosen applicable operation each step.

    Used to test that the reduction result does not depend on the order.
    """
    cur = list(as_seq(s))
    while True:
        ops: list[tuple[int, int]] = [
            (i, i + 1) for i in range(len(cur) - 1) if cur[i] == cur[i + 1]
        ]
        n = len(cur)
        for i in range(n):
            for j in range(i + 2, n):
                window = cur[i : j + 1]
                if (cur[i] == min(window) and cur[j] == max(window)) or (
                    cur[i] == max(window) and cur[j] == min(window)
                ):
                    ops.append((i, j))
        if not ops:
            return tuple(cur)
        i, j = rng.choice(ops)
        if j == i + 1:
            del cur[j]
        else:
            del cur[i + 1 : j]


def is_typical(s: Sequence[int]) -> bool:
    """True iff neither reduction operation applies to ``s``."""
    if len(s) == 0:
        return False
    for i in range(len(s) - 1):
        if s[i] == s[i + 1]:
            return False
    for i in range(1, len(s) - 1):
        a, b, c = s[i - 1], s[i], s[i + 1]
        if a <= b <= c or a >= b >= c:
            return False
    return True


def dominates(r: Sequence[int], s: Sequence[int]) -> bool:
    """``r`` dominates ``s``: some equal-length extensions satisfy ``r* <= s*``.

    Decided by reachability on the ``len(r) x len(s)`` grid of admissible
    cells ``r(i) <= s(j)`` using right, up and diagonal moves.
    """
    if not r or not s:
        raise EmptySequenceError()
    n = len(s)
    prev: list[bool] | None = None
    for a in r:
        cur = [False] * n
        for j in range(n):
            if a > s[j]:
                continue
            if prev is None:
                cur[j] = j == 0 or cur[j - 1]
            else:
                cur[j] = prev[j] or (j > 0 and (prev[j - 1] or cur[j - 1]))
        if not any(cur):
            return False
        prev = cur
    assert prev is not None
    return prev[-1]


def equivalent(r: Sequence[int], s: Sequence[int]) -> bool:
    return dominates(r, s) and dominates(s, r)


def merge_pointwise(r: Sequence[int], s: Sequence[int]) -> IntSeq:
    if len(r) != len(s):
        raise ValueError(f"length mismatch: {len(r)} != {len(s)}")
    return tuple(a + b for a, b in zip(r, s))

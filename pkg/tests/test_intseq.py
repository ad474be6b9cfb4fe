import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import int_seqs
from spdcut.intseq import (
    EmptySequenceError,
    canonical_argmax,
    canonical_argmin,
    dominates,
    equivalent,
    format_seq,
    is_typical,
    merge_pointwise,
    parse_seq,
    typical_sequence,
    typical_sequence_naive,
    typical_sequence_randomized,
)


def alternates(s):
    """Strictly alternating up/down with no equal neighbours."""
    diffs = [b - a for a, b in zip(s, s[1:])]
    return all(d != 0 for d in diffs) and all(d1 * d2 < 0 for d1, d2 in zip(diffs, diffs[1:]))


@pytest.mark.parametrize(
    "seq, values, indices",
    [
        ((5, 5, 5), (5,), (1,)),
        ((1,), (1,), (1,)),
        ((3, 1, 4, 1, 5, 9, 2, 6), (3, 1, 9, 2, 6), (1, 2, 6, 7, 8)),
        ((2, 2, 1), (2, 1), (1, 3)),
        ((1, 2, 3), (1, 3), (1, 3)),
    ],
)
def test_typical_sequence_examples(seq, values, indices):
    view = typical_sequence(seq)
    assert view.values == values
    assert view.source_indices == indices


@pytest.mark.parametrize(
    "seq, expected",
    [((2, 2, 1), (2, 1)), ((1, 2, 3), (1, 3)), ((3, 1, 4, 1, 5, 9, 2, 6), (3, 1, 9, 2, 6))],
)
def test_naive_examples(seq, expected):
    assert typical_sequence_naive(seq) == expected


def test_empty_sequences_rejected():
    with pytest.raises(EmptySequenceError):
        typical_sequence(())
    with pytest.raises(EmptySequenceError):
        typical_sequence_naive([])
    with pytest.raises(EmptySequenceError):
        dominates((), (1,))


def test_exhaustive_small_alphabet():
    for n in range(1, 6):
        for s in itertools.product(range(4), repeat=n):
            assert typical_sequence(s).values == typical_sequence_naive(s), s


@given(int_seqs(max_size=40))
def test_linear_matches_naive(s):
    view = typical_sequence(s)
    assert view.values == typical_sequence_naive(s)
    assert tuple(s[i - 1] for i in view.source_indices) == view.values


@given(int_seqs(min_size=257, max_size=400, lo=-3, hi=3))
def test_long_inputs_take_array_path(s):
    # inputs above 256 entries go through the vectorised branch
    view = typical_sequence(s)
    assert view.values == typical_sequence_naive(s)
    assert tuple(s[i - 1] for i in view.source_indices) == view.values


def test_long_alternating_input_is_already_typical():
    s = tuple((-1) ** i * i for i in range(1000))
    view = typical_sequence(s)
    assert view.values == s
    assert view.source_indices == tuple(range(1, 1001))


@given(int_seqs(max_size=30))
def test_result_alternates_and_is_fixpoint(s):
    t = typical_sequence(s).values
    assert alternates(t)
    assert is_typical(t)
    assert typical_sequence(t).values == t


@given(int_seqs(max_size=20), st.integers(0, 10**6))
def test_reduction_order_irrelevant(s, seed):
    assert typical_sequence_randomized(s, random.Random(seed)) == typical_sequence_naive(s)


@given(int_seqs(max_size=30))
def test_extremes_survive(s):
    t = typical_sequence(s).values
    assert min(t) == min(s) and max(t) == max(s)
    assert t[0] == s[0] and t[-1] == s[-1]


@pytest.mark.parametrize(
    "r, s, expected",
    [
        ((1, 3), (2, 3), True),
        ((2, 1), (1, 2), False),
        # every extension of the left side contains a 9, the right side never exceeds 7
        ((1, 9, 2), (1, 5, 2, 7, 2), False),
        ((1, 5, 2, 7, 2), (1, 9, 2), True),
        ((4, 1), (4, 1), True),
        ((1, 3, 2), (1, 3, 3, 2), True),
        ((1, 2), (2, 1), False),
    ],
)
def test_dominates_examples(r, s, expected):
    assert dominates(r, s) is expected


def test_extension_search_agrees_on_listed_pair():
    assert not _brute_dominates((1, 9, 2), (1, 5, 2, 7, 2), 8)


def test_equivalence_examples():
    assert equivalent((4, 1), (4, 1))
    assert equivalent((1, 3, 2), (1, 3, 3, 2))
    assert not equivalent((1, 2), (2, 1))


def _brute_dominates(r, s, max_len):
    """Search over explicit extensions up to a fixed length."""

    def extensions(seq, length):
        for reps in itertools.product(range(length), repeat=len(seq)):
            if sum(reps) == length - len(seq):
                yield tuple(v for v, k in zip(seq, reps) for _ in range(k + 1))

    for length in range(max(len(r), len(s)), max_len + 1):
        ext_s = list(extensions(s, length))
        for er in extensions(r, length):
            if any(all(a <= b for a, b in zip(er, es)) for es in ext_s):
                return True
    return False


@given(int_seqs(max_size=3, lo=0, hi=3), int_seqs(max_size=3, lo=0, hi=3))
def test_dominates_matches_extension_search(r, s):
    assert dominates(r, s) == _brute_dominates(r, s, len(r) + len(s))


@given(int_seqs(max_size=10), int_seqs(max_size=10))
def test_domination_invariant_under_typical(r, s):
    tr, ts = typical_sequence(r).values, typical_sequence(s).values
    assert dominates(r, s) == dominates(tr, ts)


@given(int_seqs(max_size=8, lo=0, hi=4), int_seqs(max_size=8, lo=0, hi=4), int_seqs(max_size=8, lo=0, hi=4))
def test_domination_transitive(a, b, c):
    if dominates(a, b) and dominates(b, c):
        assert dominates(a, c)


@given(int_seqs(max_size=10))
def test_domination_reflexive_and_typical_equivalent(s):
    assert dominates(s, s)
    assert equivalent(s, typical_sequence(s).values)


@pytest.mark.parametrize(
    "a, b, out",
    [((0, 0), (3, 4), (3, 4)), ((1, 2), (2, 1), (3, 3)), ((1, 5, 2), (2, 0, 0), (3, 5, 2))],
)
def test_merge_pointwise(a, b, out):
    assert merge_pointwise(a, b) == out


def test_merge_pointwise_length_mismatch():
    with pytest.raises(ValueError):
        merge_pointwise((1, 2), (1,))


def test_canonical_extremes():
    assert canonical_argmin((2, 1, 1)) == 2
    assert canonical_argmax((7,)) == 1
    assert canonical_argmax((3, 9, 9, 1)) == 2


@given(int_seqs(max_size=15))
def test_seq_text_round_trip(s):
    assert parse_seq(format_seq(s)) == s


def test_parse_seq_rejects_garbage():
    with pytest.raises(ValueError):
        parse_seq("1,,2")
    with pytest.raises(ValueError):
        parse_seq("")

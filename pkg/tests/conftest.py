import random

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from spdcut.generate import random_spd

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


def int_seqs(min_size=1, max_size=12, lo=-5, hi=5):
    return st.lists(st.integers(lo, hi), min_size=min_size, max_size=max_size).map(tuple)


@st.composite
def small_spds(draw, max_leaves=7, max_weight=1):
    """Random labelled series parallel digraph together with its tree."""
    leaves = draw(st.integers(1, max_leaves))
    seed = draw(st.integers(0, 2**32 - 1))
    p_series = draw(st.sampled_from([0.3, 0.5, 0.7]))
    return random_spd(leaves, random.Random(seed), max_weight=max_weight, p_series=p_series)


@pytest.fixture
def rng():
    return random.Random(12345)

import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from commbench import Partition, clamp, communities, decode, random_position
from commbench.partition import decode_labels, round_half_away


def test_clamp_examples():
    assert clamp([0.2, 3.7, 2.0], 3).tolist() == [1.0, 3.0, 2.0]


def test_halves_round_away_from_zero():
    assert round_half_away([0.5, 1.5, 2.5, -0.5, 2.49]).tolist() == [1.0, 2.0, 3.0, -1.0, 2.0]
    assert decode([1.5, 1.49, 2.5], 3).labels.tolist() == [2, 1, 3]


def test_decode_clips_to_label_range():
    assert decode_labels(np.array([[0.1, 9.0], [2.2, 1.0]]), 2).tolist() == [[1, 2], [2, 1]]


def test_communities_keep_empty_labels():
    p = Partition([1, 1, 3], 3)
    assert communities(p) == [{0, 1}, set(), {2}]


def test_partition_rejects_bad_labels():
    with pytest.raises(ValueError):
        Partition([0, 1], 2)
    with pytest.raises(ValueError):
        Partition([1, 3], 2)


def test_json_round_trip():
    p = Partition([2, 1, 2], 2)
    assert json.loads(p.to_json()) == [2, 1, 2]
    assert Partition.from_json(p.to_json(), 2) == p


def test_random_position_is_uniform_on_range():
    x = random_position(1000, 4, np.random.default_rng(7))
    assert x.min() >= 1.0 and x.max() <= 4.0
    assert abs(x.mean() - 2.5) < 0.1


def test_random_position_rejects_empty():
    with pytest.raises(ValueError):
        random_position(0, 2, np.random.default_rng(0))


@given(
    arrays(np.float64, st.integers(1, 40), elements=st.floats(-50, 50)),
    st.integers(1, 12),
)
def test_decoded_labels_always_valid(x, k):
    labels = decode(x, k).labels
    assert labels.min() >= 1 and labels.max() <= k
    assert sum(len(c) for c in communities(decode(x, k))) == len(x)


@given(arrays(np.float64, st.integers(1, 40), elements=st.floats(-50, 50)), st.integers(1, 12))
def test_clamp_is_idempotent_and_decode_agrees(x, k):
    c = clamp(x, k)
    assert np.array_equal(clamp(c, k), c)
    assert np.array_equal(decode(c, k).labels, decode(x, k).labels)

from fractions import Fraction as F

import pytest

from starpcg.errors import InvalidWitnessError
from starpcg.families import complete_graph
from starpcg.transforms import mirror, normalize, normalize_step_epsilon, separate_pair_sums
from starpcg.witness import canonicalize, check_normal_form, classify_free, min_intervals, verify

from conftest import make, random_witnesses

SWAP = {"left_free": "right_free", "right_free": "left_free", "both_free": "both_free", "not_free": "not_free"}


def test_mirror_fixed_point(k2):
    assert mirror(k2, 2) == k2


def test_mirror_p3(p3_two):
    m = mirror(p3_two, 5)
    assert m.weights == (4, 3, 1)
    assert m.intervals == ((4, 4), (7, 7))


def test_mirror_center_must_exceed_weights(p3_two):
    with pytest.raises(ValueError):
        mirror(p3_two, 4)


def test_mirror_default_center_bumped_when_weight_hits_top():
    # b_k = 2 lies below the isolated vertex's weight, so the default center is 5 + 1
    w = make(3, [(0, 1)], [1, 1, 5], [(2, 2)])
    m = mirror(w)
    assert m.weights == (5, 5, 1) and m.intervals == ((10, 10),)


def test_mirror_rejects_invalid(p4_hand):
    with pytest.raises(InvalidWitnessError):
        mirror(p4_hand.replace(intervals=[(5, 10)]))


def test_mirror_swaps_freeness_on_random(rng):
    for w in random_witnesses(rng, 150):
        c = max(max(w.weights), w.intervals[-1].hi if w.intervals else 0) + 1
        m = mirror(w, c)
        assert verify(m).valid and m.k == w.k and m.graph == w.graph
        assert classify_free(m) == SWAP[classify_free(w)]
        assert mirror(m, c) == w


def test_normalize_cherry():
    # center 0 (weight 2), leaves 1 and 2 (weight 1)
    w = make(3, [(0, 1), (0, 2)], [2, 1, 1], [(3, 3)])
    assert normalize_step_epsilon(w, 2) == F(1, 4)
    out = normalize(w)
    assert out.weights == (2, 1, F(5, 4))
    assert out.intervals == ((3, F(13, 4)),)
    assert check_normal_form(out)[0] and verify(out).valid


def test_normalize_identity_on_normal(p4_hand):
    assert normalize(p4_hand) == p4_hand


def test_normalize_k2_equal_weights(k2):
    out = normalize(k2)
    assert verify(out).valid and out.k == 1
    assert check_normal_form(out)[0]
    assert out.intervals[0].hi > 2


def test_normalize_complete_graph_equal_weights():
    n = 5
    w = make(n, complete_graph(n).edges, [1] * n, [(2, 2)])
    out = normalize(w)
    assert verify(out).valid and out.k == 1 and check_normal_form(out)[0]


def test_normalize_random_preserves_k_and_freeness(rng):
    for w in random_witnesses(rng, 200):
        out = normalize(w)
        assert verify(out).valid
        assert out.k == w.k and out.graph == w.graph
        assert check_normal_form(out)[0]
        assert classify_free(out) == classify_free(w)


def _distinct_sums(w):
    sums = [w.pair_sum(u, v) for u, v in w.graph.pairs()]
    return len(sums) == len(set(sums))


def test_separate_k3():
    w = make(3, complete_graph(3).edges, [1, 1, 1], [(2, 2)])
    out = separate_pair_sums(w)
    assert len(set(out.weights)) == 3 and out.k == 1
    assert out.graph == w.graph and verify(out).valid


def test_separate_identity_when_distinct(p4_hand):
    assert separate_pair_sums(p4_hand) == p4_hand


def test_separate_random(rng):
    for w in random_witnesses(rng, 120):
        out = separate_pair_sums(w)
        assert verify(out).valid and _distinct_sums(out)
        assert out.k == w.k
        assert min_intervals(out.graph, out.weights)[0] == canonicalize(w).k

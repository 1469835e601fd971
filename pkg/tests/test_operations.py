import pytest

from starpcg.errors import InvalidWitnessError
from starpcg.families import complete_graph
from starpcg.graph import Graph, complement_graph
from starpcg.operations import (
    add_false_twins,
    add_isolated,
    add_pendants,
    add_true_twins,
    add_universal,
    complement_witness,
)
from starpcg.witness import Witness, canonicalize, classify_free, verify

from conftest import make, random_witnesses


def test_isolated_examples(k2, p3_two):
    out, rep = add_isolated(k2)
    assert out.weights[2] == 3 and out.intervals == k2.intervals
    assert rep.k_after == rep.k_before == 1
    out, _ = add_isolated(p3_two)
    assert out.weights[3] == 7
    out, rep = add_isolated(make(2, [], [1, 1]))
    assert out.graph == Graph(3) and out.k == 0 and rep.k_after == 0


def test_universal_free_examples(k2, p3_two):
    out, rep = add_universal(k2)
    assert out.graph == complete_graph(3)
    assert out.weights[2] == 3 and out.intervals == ((2, 5),)
    assert rep.case == "universal/free" and rep.k_after == 1
    out, rep = add_universal(p3_two)
    assert out.weights[3] == 7 and out.intervals == ((3, 3), (6, 13))
    assert out.graph.edges == {(0, 1), (1, 2), (0, 3), (1, 3), (2, 3)}
    assert rep.k_after == 2


def test_universal_not_free(p4_hand):
    out, rep = add_universal(p4_hand)
    assert out.weights[4] == 15 and out.intervals == ((5, 11), (16, 25))
    assert rep.case == "universal/non-free" and (rep.k_before, rep.k_after) == (1, 2)
    assert not rep.fallback_used


def test_universal_left_free_mirrors_first():
    w = make(3, [(0, 1)], [1, 1, 5], [(2, 2)])
    assert classify_free(w) == "left_free"
    out, rep = add_universal(w)
    assert rep.case == "universal/free-mirrored" and rep.k_after == 1


def test_pendant_examples(p4_hand):
    w = make(2, [(0, 1)], [1, 2], [(3, 3)])
    out, rep = add_pendants(w, [1])
    assert out.weights == (1, 2, 6) and out.intervals == ((3, 3), (8, 8))
    assert rep.k_after == 2
    out, rep = add_pendants(p4_hand, [0, 0])
    assert out.weights[4:] == (22, 22) and out.intervals == ((5, 11), (24, 24))
    assert out.graph.edges == p4_hand.graph.edges | {(0, 4), (0, 5)}
    out, rep = add_pendants(p4_hand, [])
    assert out == p4_hand and rep.k_after == 1


def test_pendant_bad_anchor(p4_hand):
    with pytest.raises(ValueError):
        add_pendants(p4_hand, [9])


def test_false_twin_examples(p4_hand):
    w = make(2, [(0, 1)], [1, 2], [(3, 3)])
    out, rep = add_false_twins(w, 0)
    assert out.weights == (1, 2, 1) and out.intervals == ((3, 3),) and rep.k_after == 1
    assert out.graph.edges == {(0, 1), (1, 2)}
    out, rep = add_false_twins(p4_hand, 1)
    assert out.intervals == ((5, 7), (9, 11))
    assert out.weights[4] == 4 and out.graph.neighbors(4) == {0, 2}
    assert rep.case == "twin/split" and rep.k_after == 2
    out, rep = add_false_twins(w, 0, count=3)
    assert out.weights == (1, 2, 1, 1, 1) and out.intervals == ((3, 3),)
    assert out.graph.neighbors(1) == {0, 2, 3, 4}


def test_twin_argument_errors(k2):
    with pytest.raises(ValueError):
        add_false_twins(k2, 5)
    with pytest.raises(ValueError):
        add_true_twins(k2, 0, count=0)


def test_true_twin_examples():
    w = make(2, [(0, 1)], [1, 2], [(3, 3)])
    out, rep = add_true_twins(w, 0)
    assert out.graph == complete_graph(3)
    assert out.weights == (1, 2, 1) and out.intervals == ((2, 2), (3, 3)) and rep.k_after == 2
    out2, rep2 = add_true_twins(out, 1)
    assert out2.graph == complete_graph(4)
    assert out2.intervals == ((2, 2), (3, 3), (4, 4)) and rep2.k_after == 3


def test_true_twin_already_covered():
    w = make(3, complete_graph(3).edges, [1, 1, 2], [(2, 3)])
    out, rep = add_true_twins(w, 0)
    assert out.graph == complete_graph(4) and rep.k_after == 1


def test_complement_examples(p4_hand, p3_two):
    out, rep = complement_witness(p4_hand)
    assert out.graph == complement_graph(p4_hand.graph)
    assert out.intervals == ((3, 3), (12, 14)) and rep.k_after == 2
    k3 = make(3, complete_graph(3).edges, [1, 1, 1], [(2, 2)])
    out, rep = complement_witness(k3)
    assert out.graph == Graph(3) and out.k == 0 and rep.k_bound() == 0
    out, rep = complement_witness(p3_two)
    assert out.graph.edges == {(0, 2)} and out.intervals == ((5, 5),)
    assert rep.k_after == 1 == rep.k_bound()


def test_invalid_inputs_rejected(p4_hand):
    bad = p4_hand.replace(intervals=[(5, 10)])
    for op in (add_isolated, add_universal, complement_witness):
        with pytest.raises(InvalidWitnessError):
            op(bad)


def _drop_last(w: Witness, count: int) -> Witness:
    n = w.graph.n - count
    g = Graph(n, frozenset(e for e in w.graph.edges if max(e) < n))
    return Witness(g, w.weights[:n], w.intervals)


def test_false_twin_deletion_restores_graph(rng):
    for w in random_witnesses(rng, 60):
        v = rng.randrange(w.graph.n)
        out, _ = add_false_twins(w, v, 2)
        back = _drop_last(out, 2)
        assert back.graph == w.graph and verify(back).valid


def test_complement_twice(rng):
    for w in random_witnesses(rng, 80):
        once, _ = complement_witness(w)
        twice, _ = complement_witness(once)
        assert twice.graph == w.graph and verify(twice).valid
        assert abs(twice.k - w.k) <= 2


def test_randomized_operations_respect_bounds(rng):
    for w in random_witnesses(rng, 40):
        n = w.graph.n
        for out, rep in (
            add_isolated(w),
            add_universal(w),
            add_pendants(w, [rng.randrange(n) for _ in range(rng.randint(1, 3))]),
            add_false_twins(w, rng.randrange(n), rng.randint(1, 2)),
            add_true_twins(w, rng.randrange(n), rng.randint(1, 2)),
            complement_witness(w),
        ):
            assert verify(out).valid, rep
            assert rep.k_after <= rep.k_bound(), rep


def test_canonical_input_keeps_complement_bound(rng):
    for w in random_witnesses(rng, 60):
        c = canonicalize(w)
        out, rep = complement_witness(c)
        assert abs(canonicalize(out).k - c.k) <= 1

import random

import pytest

from starpcg.constructors import (
    acyclic_witness,
    caterpillar_order,
    caterpillar_witness,
    lobster_witness,
    path_witness,
)
from starpcg.families import (
    complete_binary_tree,
    cycle_graph,
    path_graph,
    random_caterpillar,
    random_forest,
    random_lobster,
    spider,
    star_graph,
)
from starpcg.graph import Graph, classify_tree, radius_and_centers
from starpcg.solver import is_star_k
from starpcg.witness import canonicalize, classify_free, min_intervals, verify


def test_path_small_cases():
    assert path_witness(1).weights == (1,) and path_witness(1).k == 0
    w = path_witness(2)
    assert w.weights == (1, 1) and w.intervals == ((2, 2),)


@pytest.mark.parametrize("n", range(3, 30))
def test_path_one_interval(n):
    w = path_witness(n)
    assert w.graph == path_graph(n)
    assert verify(w).valid and w.k == 1
    assert min_intervals(w.graph, w.weights)[0] == 1


def test_path_eight_not_free():
    assert classify_free(path_witness(8)) == "not_free"


def test_path_rejects_zero():
    with pytest.raises(ValueError):
        path_witness(0)


def test_caterpillar_examples():
    p5_leaf = Graph(6, path_graph(5).edges | {(2, 5)})
    w = caterpillar_witness(p5_leaf)
    assert verify(w).valid and w.k == 1
    w = caterpillar_witness(star_graph(4))
    assert verify(w).valid and w.k == 1
    p6 = path_graph(6)
    assert caterpillar_witness(p6) == path_witness(6)


def test_caterpillar_relabeled_path():
    g = path_graph(7).relabel([3, 0, 6, 2, 5, 1, 4])
    w = caterpillar_witness(g)
    assert w.graph == g and verify(w).valid and w.k == 1


def test_caterpillar_rejects_other_trees():
    with pytest.raises(ValueError):
        caterpillar_witness(spider(2, 2, 2))
    with pytest.raises(ValueError):
        caterpillar_witness(cycle_graph(5))


def test_caterpillar_order_is_permutation():
    rng = random.Random(9)
    for _ in range(50):
        t = random_caterpillar(rng.randint(4, 16), rng)
        cls = classify_tree(t)
        if cls.tag == "caterpillar":
            assert sorted(caterpillar_order(t, cls.spine)) == list(range(t.n))


def test_random_caterpillars_one_interval():
    rng = random.Random(11)
    for _ in range(60):
        t = random_caterpillar(rng.randint(2, 14), rng)
        w = canonicalize(caterpillar_witness(t))
        assert w.graph == t and verify(w).valid and w.k == 1


def test_lobster_spider():
    w, rep = lobster_witness(spider(2, 2, 2))
    assert verify(w).valid and w.k == 2
    assert rep.op == "lobster" and rep.k_after == 2


def test_lobster_on_caterpillar_input():
    w, rep = lobster_witness(star_graph(3))
    assert w.k == 1 and rep.case == "lobster/caterpillar"


def test_lobster_rejects_tree():
    with pytest.raises(ValueError):
        lobster_witness(complete_binary_tree(4))


def test_random_lobsters():
    rng = random.Random(12)
    for _ in range(40):
        t = random_lobster(rng.randint(4, 15), rng)
        w, _ = lobster_witness(t)
        assert w.graph == t and verify(w).valid and w.k <= 2


def test_acyclic_examples():
    w, rep = acyclic_witness(Graph(4))
    assert w.k == 0 and verify(w).valid
    t = complete_binary_tree(3)
    w, _ = acyclic_witness(t)
    assert w.graph == t and verify(w).valid and w.k <= 3
    w, _ = acyclic_witness(path_graph(7))
    assert verify(w).valid and w.k <= 3
    assert path_witness(7).k == 1


def test_acyclic_rejects_cycle():
    with pytest.raises(ValueError):
        acyclic_witness(cycle_graph(4))


def test_random_forests_within_radius():
    rng = random.Random(13)
    for _ in range(40):
        f = random_forest(rng.randint(1, 20), rng)
        w, rep = acyclic_witness(f)
        rad = radius_and_centers(f)[0]
        assert w.graph == f and verify(w).valid and w.k <= rad
        assert canonicalize(w).k <= max(f.m, 0)


def test_spider_lower_bound_pins_lobster_value():
    assert not is_star_k(spider(2, 2, 2), 1).feasible


def _restrict(w, vertices):
    sub, old = w.graph.induced(vertices)
    return w.replace(graph=sub, weights=[w.weights[v] for v in old])


def test_height_two_binary_tree_has_one_interval_witness():
    # radius 2 but a caterpillar: no three legs of length two meet at one vertex
    t = complete_binary_tree(2)
    assert radius_and_centers(t)[0] == 2
    assert classify_tree(t).tag == "caterpillar"
    cert = is_star_k(t, 1)
    assert cert.feasible and verify(cert.witness).valid


def test_height_three_binary_tree_needs_two():
    t = complete_binary_tree(3)
    legs = [1, 0, 2, 3, 7, 4, 9]
    sub, _ = t.induced(legs)
    assert classify_tree(sub).tag == "lobster" and sorted(sub.degree(v) for v in range(7)) == [1, 1, 1, 2, 2, 2, 3]
    assert not is_star_k(sub, 1).feasible
    w, _ = lobster_witness(t)
    assert w.k == 2
    assert verify(_restrict(w, legs)).valid


def test_restriction_to_induced_subgraph_stays_valid():
    rng = random.Random(14)
    for _ in range(50):
        t = random_lobster(rng.randint(5, 14), rng)
        w, _ = lobster_witness(t)
        keep = sorted(rng.sample(range(t.n), rng.randint(1, t.n)))
        assert verify(_restrict(w, keep)).valid

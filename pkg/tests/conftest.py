import random
import sys
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from starpcg.graph import Graph
from starpcg.solver import random_valid_witness
from starpcg.witness import Witness, min_intervals


def make(n, edges, weights, intervals=()):
    return Witness(Graph.from_edges(n, edges), weights, intervals)


@pytest.fixture
def p4_hand():
    # path 0-1-2-3, all six pair sums {6,5,11 | 3,12,14}
    return make(4, [(0, 1), (1, 2), (2, 3)], [2, 4, 1, 10], [(5, 11)])


@pytest.fixture
def p3_two():
    return make(3, [(0, 1), (1, 2)], [1, 2, 4], [(3, 3), (6, 6)])


@pytest.fixture
def k2():
    return make(2, [(0, 1)], [1, 1], [(2, 2)])


@pytest.fixture
def rng():
    return random.Random(20240611)


def random_graph(rng, n, p=0.5):
    return Graph(n, frozenset(e for e in ((i, j) for i in range(n) for j in range(i + 1, n)) if rng.random() < p))


def random_witnesses(rng, count, n_max=7, w_max=12):
    out = []
    while len(out) < count:
        g = random_graph(rng, rng.randint(2, n_max), rng.random())
        w = random_valid_witness(g, rng, w_max=w_max)
        if w is not None:
            out.append(w)
    return out


@st.composite
def witnesses(draw, n_max=6, w_max=10):
    """A random graph with weights that admit some interval set."""
    n = draw(st.integers(2, n_max))
    weights = draw(st.lists(st.integers(1, w_max), min_size=n, max_size=n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    # choose edges as whole sum classes so the weights never tie an edge with a non-edge
    sums = sorted({weights[i] + weights[j] for i, j in pairs})
    chosen = draw(st.sets(st.sampled_from(sums))) if sums else set()
    edges = [(i, j) for i, j in pairs if weights[i] + weights[j] in chosen]
    g = Graph(n, frozenset(edges))
    k, intervals = min_intervals(g, weights)
    return Witness(g, [Fraction(x) for x in weights], intervals)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)

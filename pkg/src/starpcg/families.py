"""Named graphs and random generators for the tree families."""
from __future__ import annotations

import random

from .graph import Graph, complement_graph


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, frozenset((min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return complement_graph(Graph(n))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center at vertex 0."""
    return Graph(leaves + 1, frozenset((0, i) for i in range(1, leaves + 1)))


def spider(*legs: int) -> Graph:
    """Center 0 and one path per entry of ``legs``.

    ``spider(2, 2, 2)`` is the 7-vertex asteroidal-triple tree used as the AT
    fixture: legs are 0-1-2, 0-3-4, 0-5-6.
    """
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, frozenset(edges))


def complete_binary_tree(height: int) -> Graph:
    n = 2 ** (height + 1) - 1
    return Graph(n, frozenset((((i - 1) // 2), i) for i in range(1, n)))


def _shuffle_labels(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform-ish random labeled tree by random attachment."""
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    return _shuffle_labels(Graph(n, frozenset(edges)), rng)


def random_caterpillar(n: int, rng: random.Random, shuffle: bool = True) -> Graph:
    """Random caterpillar on ``n`` vertices: a spine plus leaves hung on it."""
    if n <= 2:
        return path_graph(n)
    spine_len = rng.randint(1, n - 2)
    edges = [(i, i + 1) for i in range(spine_len - 1)]
    # each spine end needs a leaf so the spine vertices keep degree >= 2
    edges.append((0, spine_len))
    nxt = spine_len + 1
    if spine_len > 1:
        edges.append((spine_len - 1, nxt))
        nxt += 1
    while nxt < n:
        edges.append((rng.randrange(spine_len), nxt))
        nxt += 1
    g = Graph(nxt, frozenset(edges))
    return _shuffle_labels(g, rng) if shuffle else g


def random_lobster(n: int, rng: random.Random, shuffle: bool = True) -> Graph:
    """Random lobster: a caterpillar with pendant vertices added to it."""
    if n <= 3:
        return path_graph(n)
    core_n = rng.randint(max(2, (n + 1) // 2), n - 1)
    core = random_caterpillar(core_n, rng, shuffle=False)
    edges = list(core.edges)
    for v in range(core_n, n):
        edges.append((rng.randrange(core_n), v))
    g = Graph(n, frozenset(edges))
    return _shuffle_labels(g, rng) if shuffle else g


def random_forest(n: int, rng: random.Random) -> Graph:
    """Random forest: each new vertex starts a component or attaches to an old one."""
    edges = []
    for i in range(1, n):
        if rng.random() < 0.8:
            edges.append((rng.randrange(i), i))
    return _shuffle_labels(Graph(n, frozenset(edges)), rng)

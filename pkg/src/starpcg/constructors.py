"""Witness builders for paths, caterpillars, lobsters and forests."""
from __future__ import annotations

from dataclasses import replace
from fractions import Fraction

from .errors import ResourceLimitError
from .graph import Graph, bfs_distances, bfs_parents, classify_tree, components, radius_and_centers
from .operations import OpReport, add_pendants
from .solver import is_star_k, is_star_k_in_orders
from .transforms import separate_pair_sums
from .witness import Witness, relabel_witness, require_valid, verify


def path_witness(n: int) -> Witness:
    """One-interval witness of the path ``0 - 1 - ... - n-1``.

    Vertices alternate between "low" weights, decreasing along the path by
    gaps ``d_b = 1/2 + 2^-(b+2)``, and "high" weights ``U - low``. Every edge
    sum lands in ``[U - 1, U]``: ``d_b < 1`` keeps consecutive edges inside,
    ``d_b + d_{b+1} > 1`` pushes skip pairs below, and all low-low (high-high)
    sums fall below (above) the interval.
    """
    if n < 1:
        raise ValueError("a path needs at least one vertex")
    g = Graph(n, frozenset((i, i + 1) for i in range(n - 1)))
    if n == 1:
        return Witness(g, [1], ())
    if n == 2:
        return Witness(g, [1, 1], [(2, 2)])
    n_low = (n + 1) // 2
    gaps = [Fraction(1, 2) + Fraction(1, 2 ** (b + 2)) for b in range(1, n_low)]
    lows = [1 + sum(gaps, Fraction(0))]
    for d in gaps:
        lows.append(lows[-1] - d)
    lo = 2 * lows[0] + 1
    hi = lo + 1
    weights = []
    for v in range(n):
        b = v // 2
        weights.append(lows[b] if v % 2 == 0 else hi - lows[b])
    w = Witness(g, weights, [(lo, hi)])
    require_valid(w, "path witness")
    return w


def _relabel_path(t: Graph, order) -> Witness:
    base = path_witness(t.n)
    return relabel_witness(base, list(order))


def caterpillar_order(t: Graph, spine) -> tuple:
    """A weight order under which a one-interval witness of the caterpillar exists.

    The spine, extended by one leaf at each end, is laid out like
    :func:`path_witness`: alternate low and high vertices, lows decreasing and
    highs increasing along the path. A further leaf on a high vertex is a low
    slotted just below that vertex's first low neighbour; a leaf on a low
    vertex is a high slotted just below that vertex's second high neighbour.
    """
    spine = list(spine)
    on_path = set(spine)
    leaves = {v: sorted(u for u in t.neighbors(v) if t.degree(u) == 1) for v in spine}
    first = leaves[spine[0]][0]
    last = next(u for u in leaves[spine[-1]] if u != first)
    path = [first] + spine + [last]
    on_path |= {first, last}
    key = {}
    role = {}
    for j, v in enumerate(path):
        if j % 2 == 0:
            b = j // 2 + 1
            key[v], role[v] = (0, -2 * b), ("low", b)
        else:
            b = (j + 1) // 2
            key[v], role[v] = (1, 2 * b), ("high", b)
    for v in spine:
        kind, b = role[v]
        for leaf in leaves[v]:
            if leaf in on_path:
                continue
            key[leaf] = (0, -(2 * b + 1)) if kind == "high" else (1, 2 * b - 1)
    return tuple(sorted(range(t.n), key=lambda v: (key[v], v)))


def caterpillar_witness(t: Graph, budget: int | None = None) -> Witness:
    """One-interval witness of a caterpillar (paths use the closed form).

    The exact solver is run at ``k = 1`` under the order from
    :func:`caterpillar_order`; if that order fails, the unrestricted search is
    tried within ``budget``. A caterpillar always has such a witness, so
    running out of budget raises :class:`ResourceLimitError`, never "no witness".
    """
    cls = classify_tree(t)
    if cls.tag == "path":
        return _relabel_path(t, cls.spine)
    if cls.tag != "caterpillar":
        raise ValueError(f"not a caterpillar (classified as {cls.tag})")
    order = caterpillar_order(t, cls.spine)
    cert = is_star_k_in_orders(t, 1, [order, order[::-1]], budget=budget)
    if not cert.feasible:
        cert = is_star_k(t, 1, budget=budget)
    if not cert.feasible:
        raise ResourceLimitError("caterpillar search ended without a witness", cert.nodes_explored)
    return cert.witness


def lobster_witness(t: Graph, budget: int | None = None) -> tuple[Witness, OpReport]:
    """At most two intervals: caterpillar core witness, then its leaves as pendants."""
    cls = classify_tree(t)
    if cls.tag in ("path", "caterpillar"):
        w = caterpillar_witness(t, budget)
        return w, OpReport("lobster", "lobster/caterpillar", w.k, w.k, False, verify(w))
    if cls.tag != "lobster":
        raise ValueError(f"not a lobster (classified as {cls.tag})")
    leaves = sorted(v for v in range(t.n) if t.degree(v) == 1)
    leaf_set = set(leaves)
    core, old = t.induced(v for v in range(t.n) if v not in leaf_set)
    index = {v: i for i, v in enumerate(old)}
    core_w = caterpillar_witness(core, budget)
    anchors = [index[next(iter(t.neighbors(x)))] for x in leaves]
    w, rep = add_pendants(core_w, anchors)
    w = relabel_witness(w, old + leaves)
    require_valid(w, "lobster witness")
    return w, replace(rep, op="lobster", case="lobster/" + rep.case.split("/", 1)[1])


def acyclic_witness(f: Graph) -> tuple[Witness, OpReport]:
    """Witness of a forest with at most ``rad(f)`` intervals.

    Start from one center per component with distinct weights and no
    intervals, then add the next BFS layer as pendants on their parents, one
    round per unit of radius.
    """
    if f.m != f.n - len(components(f)):
        raise ValueError("input graph has a cycle")
    rad, centers = radius_and_centers(f)
    seeds = [min(c) for c in centers]
    parent = {}
    depth = {}
    for s in seeds:
        parent.update(bfs_parents(f, s))
        depth.update(bfs_distances(f, s))
    order = list(seeds)
    position = {v: i for i, v in enumerate(order)}
    w = Witness(Graph(len(seeds)), range(1, len(seeds) + 1), ())
    cases = []
    for r in range(1, rad + 1):
        layer = sorted(v for v in range(f.n) if depth[v] == r)
        if len(set(w.weights)) != len(w.weights):
            w = separate_pair_sums(w)
        w, rep = add_pendants(w, [position[parent[x]] for x in layer])
        cases.append(rep.case)
        for x in layer:
            position[x] = len(order)
            order.append(x)
    w = relabel_witness(w, order)
    report = verify(w)
    if not report.valid:
        raise AssertionError(f"acyclic construction failed: {report.describe()}")
    return w, OpReport("acyclic", f"acyclic/rounds={rad}", 0, w.k, False, report)

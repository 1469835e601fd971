"""Exact star numbers and witness synthesis for small graphs.

Search space
------------
By ``separate_pair_sums`` any witness can be perturbed so that all pair sums
are distinct without changing the graph or the interval count, and by
``normalize`` the weights can be made distinct. So it suffices to look for
witnesses with a strict weight order.

Two engines are provided.

``slots`` (default)
    Branch on the weight order of the vertices (a permutation, read as
    ``w(perm[0]) <= w(perm[1]) <= ...``). With ``2k`` thresholds the line splits
    into ``2k + 1`` slots; edges sit in odd slots, non-edges in even ones. Since
    the weights are sorted, the slot of pair ``(i, j)`` (positions in the order)
    is monotone in ``i`` and ``j``. The monotone, parity-respecting slot
    matrices are enumerated by a compiled kernel; each complete matrix is
    handed to the exact LP. Reversing the order and reflecting the slots maps
    witnesses to witnesses, so in ``any`` mode only permutations with
    ``perm[0] < perm[-1]`` are visited.

``order``
    Place pairs one at a time as the next-larger sum and check the prefix with
    the exact LP at every node, pruning on the number of edge runs. Much slower;
    kept as an independent cross-check for small graphs.

Strict inequalities are encoded as ``+1`` margins, which is harmless because
witnesses are invariant under positive scaling.
"""
from __future__ import annotations

import itertools
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import kernels
from .errors import ResourceLimitError, StarPCGError
from .graph import Graph
from .lp import lp_feasible
from .witness import Witness, min_intervals, verify

DEFAULT_BUDGET = 10_000_000
GRID_FULL_LIMIT = 4_000_000
MODES = ("any", "left_free", "right_free")


def default_budget() -> int:
    env = os.environ.get("STARPCG_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True)
class SolverCertificate:
    outcome: str  # "witness" or "infeasible"
    k: int
    mode: str
    nodes_explored: int
    witness: Witness | None = None
    engine: str = "slots"
    lp_calls: int = 0

    @property
    def feasible(self) -> bool:
        return self.outcome == "witness"

    def to_dict(self) -> dict:
        from .witness import witness_to_dict

        d = {
            "outcome": self.outcome,
            "k": self.k,
            "mode": self.mode,
            "engine": self.engine,
            "nodes_explored": self.nodes_explored,
            "lp_calls": self.lp_calls,
        }
        if self.witness is not None:
            d["witness"] = witness_to_dict(self.witness)
        return d


def _cells(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def slot_system(n: int, k: int, slots) -> list:
    """LP rows for a monotone slot matrix; variables are sorted weights then thresholds.

    Variable ``i < n`` is the weight at position ``i`` of the order and
    ``n + s - 1`` is threshold ``t_s``. Slot ``s`` is ``[t_s, t_{s+1} - 1]``
    (open-ended at the extremes). Only the extreme cells of each slot region
    need bounds since the weights are sorted.
    """
    top = 2 * k
    cells = _cells(n)
    where = {c: s for c, s in zip(cells, slots)}
    t = lambda s: n + s - 1  # noqa: E731
    rows = [({0: 1}, 1)]
    rows += [({i + 1: 1, i: -1}, 0) for i in range(n - 1)]
    rows += [({t(s + 1): 1, t(s): -1}, 1) for s in range(1, top)]
    for (i, j), s in where.items():
        if s >= 1 and where.get((i, j - 1)) != s and where.get((i - 1, j)) != s:
            rows.append(({i: 1, j: 1, t(s): -1}, 0))
        if s < top and where.get((i, j + 1)) != s and where.get((i + 1, j)) != s:
            rows.append(({t(s + 1): 1, i: -1, j: -1}, 1))
    return rows


def _witness_from_slots(g: Graph, perm, k, point) -> Witness:
    n = g.n
    weights = [None] * n
    for pos, v in enumerate(perm):
        weights[v] = point[pos]
    return _tight_witness(g, weights, k)


def _tight_witness(g: Graph, weights, k) -> Witness:
    res = min_intervals(g, weights)
    if res is None or res[0] > k:
        raise AssertionError("LP point does not realize the searched structure")
    w = Witness(g, weights, res[1])
    assert verify(w).valid
    return w


class _SlotSearch:
    """Callable search over the permutations whose first vertex is in ``firsts``."""

    def __init__(self, g: Graph, k: int, mode: str, budget: int):
        self.g, self.k, self.mode, self.budget = g, k, mode, budget

    def perms(self, firsts):
        n = self.g.n
        for first in firsts:
            rest = [v for v in range(n) if v != first]
            for tail in itertools.permutations(rest):
                perm = (first,) + tail
                if self.mode == "any" and perm[0] > perm[-1]:
                    continue
                yield perm

    def __call__(self, firsts):
        return self.run(self.perms(firsts))

    def run(self, perms):
        g, k, mode = self.g, self.k, self.mode
        n = g.n
        cells = _cells(n)
        nodes = 0
        lp_calls = 0
        found = None
        for perm in perms:
            parity = [1 if g.has_edge(perm[i], perm[j]) else 0 for i, j in cells]
            if mode == "right_free" and not parity[-1]:
                continue

            def on_matrix(slots, perm=perm):
                nonlocal lp_calls, found
                lp_calls += 1
                point = lp_feasible(slot_system(n, k, slots), nvars=n + 2 * k)
                if point is None:
                    return False
                found = _witness_from_slots(g, perm, k, point)
                return True

            used, status = kernels.enumerate_slots(
                parity, n, 2 * k, mode == "left_free", on_matrix, self.budget - nodes
            )
            nodes += used
            if status == kernels.OVER_BUDGET:
                return ("budget", nodes, lp_calls, None)
            if found is not None:
                return ("witness", nodes, lp_calls, found)
        return ("infeasible", nodes, lp_calls, None)


def _edgeless_certificate(g: Graph, k: int, mode: str, engine: str) -> SolverCertificate:
    ones = [Fraction(1)] * g.n
    if mode == "any" or g.n < 2:
        return SolverCertificate("witness", k, mode, 0, Witness(g, ones, ()), engine)
    if k == 0:
        return SolverCertificate("infeasible", k, mode, 0, None, engine)
    # one interval holding no sum, below (left-free) or above (right-free) every sum
    iv = (Fraction(1), Fraction(1)) if mode == "left_free" else (Fraction(3), Fraction(3))
    return SolverCertificate("witness", k, mode, 0, Witness(g, ones, (iv,)), engine)


def is_star_k(
    g: Graph,
    k: int,
    mode: str = "any",
    budget: int | None = None,
    engine: str = "slots",
    threads: int = 1,
) -> SolverCertificate:
    """Decide whether ``g`` has a witness with at most ``k`` intervals.

    ``mode`` restricts to left-free or right-free witnesses. Exhausting the
    node budget raises :class:`ResourceLimitError`; ``infeasible`` is only
    returned after the whole search space has been covered.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if k < 0:
        raise ValueError("k must be nonnegative")
    budget = default_budget() if budget is None else budget
    if g.m == 0:
        return _edgeless_certificate(g, k, mode, engine)
    if k == 0:
        return SolverCertificate("infeasible", k, mode, 0, None, engine)
    if engine == "order":
        return _order_search(g, k, mode, budget)
    if engine != "slots":
        raise ValueError(f"unknown engine {engine!r}")

    search = _SlotSearch(g, k, mode, budget)
    if threads > 1 and g.n > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(search, [[v] for v in range(g.n)]))
    else:
        results = [search(range(g.n))]
    nodes = sum(r[1] for r in results)
    lp_calls = sum(r[2] for r in results)
    # the lowest first vertex with a witness wins, as in the sequential order
    for status, _, _, found in results:
        if status == "witness":
            return SolverCertificate("witness", k, mode, nodes, found, "slots", lp_calls)
        if status == "budget":
            raise ResourceLimitError(f"node budget {budget} exhausted at k={k}", nodes)
    return SolverCertificate("infeasible", k, mode, nodes, None, "slots", lp_calls)


def is_star_k_in_orders(g: Graph, k: int, perms, budget: int | None = None) -> SolverCertificate:
    """Slot search restricted to the given weight orders.

    ``infeasible`` here only means no witness respects one of those orders.
    """
    budget = default_budget() if budget is None else budget
    if g.m == 0:
        return _edgeless_certificate(g, k, "any", "slots")
    status, nodes, lp_calls, found = _SlotSearch(g, k, "any", budget).run(perms)
    if status == "budget":
        raise ResourceLimitError(f"node budget {budget} exhausted at k={k}", nodes)
    return SolverCertificate(
        "witness" if found else "infeasible", k, "any", nodes, found, "slots", lp_calls
    )


# ---------------------------------------------------------------------------
# pair-order engine


def _order_search(g: Graph, k: int, mode: str, budget: int) -> SolverCertificate:
    n = g.n
    pairs = list(g.pairs())
    is_edge = [p in g.edges for p in pairs]
    total_edges = sum(is_edge)
    placed: list[int] = []
    nodes = 0
    lp_calls = 0

    def system(prefix, unplaced):
        rows = [({v: 1}, 1) for v in range(n)]
        for a, b in zip(prefix, prefix[1:]):
            pa, pb = pairs[a], pairs[b]
            c = {}
            for v in pb:
                c[v] = c.get(v, 0) + 1
            for v in pa:
                c[v] = c.get(v, 0) - 1
            rows.append((c, 1))
        if prefix:
            last = pairs[prefix[-1]]
            for q in unplaced:
                c = {}
                for v in pairs[q]:
                    c[v] = c.get(v, 0) + 1
                for v in last:
                    c[v] = c.get(v, 0) - 1
                rows.append((c, 1))
        return rows

    def rec(unplaced, runs, in_run, edges_left):
        nonlocal nodes, lp_calls
        if not unplaced:
            if mode == "right_free" and not is_edge[placed[-1]]:
                return None
            lp_calls += 1
            point = lp_feasible(system(placed, []), nvars=n)
            return point
        # extend the current edge run first
        order = sorted(unplaced, key=lambda q: (not (in_run and is_edge[q]), q))
        for q in order:
            e = is_edge[q]
            if mode == "left_free" and not e and edges_left == total_edges:
                continue
            new_runs = runs + (1 if e and not in_run else 0)
            new_left = edges_left - e
            pending = 1 if (not e and new_left) else 0
            if new_runs + pending > k:
                continue
            if mode == "right_free" and not e and new_runs == k and new_left == 0:
                continue
            nodes += 1
            if nodes > budget:
                raise ResourceLimitError(f"node budget {budget} exhausted at k={k}", nodes)
            rest = [r for r in unplaced if r != q]
            placed.append(q)
            lp_calls += 1
            if lp_feasible(system(placed, rest), nvars=n) is not None:
                point = rec(rest, new_runs, e, new_left)
                if point is not None:
                    return point
            placed.pop()
        return None

    point = rec(list(range(len(pairs))), 0, False, total_edges)
    if point is None:
        return SolverCertificate("infeasible", k, mode, nodes, None, "order", lp_calls)
    w = _tight_witness(g, list(point), k)
    return SolverCertificate("witness", k, mode, nodes, w, "order", lp_calls)


# ---------------------------------------------------------------------------


def star_number(
    g: Graph,
    k_max: int | None = None,
    budget: int | None = None,
    engine: str = "slots",
    threads: int = 1,
) -> tuple[int, Witness]:
    """Smallest ``k`` admitting a witness; 0 for edgeless graphs."""
    k_max = g.m if k_max is None else k_max
    start = 0 if g.m == 0 else 1
    for k in range(start, k_max + 1):
        cert = is_star_k(g, k, budget=budget, engine=engine, threads=threads)
        if cert.feasible:
            return k, cert.witness
    raise StarPCGError(f"no witness with at most {k_max} intervals")


def grid_upper_bound(
    g: Graph,
    w_max: int,
    samples: int = 200_000,
    seed: int = 0,
) -> tuple[int, Witness] | None:
    """Best interval count over integer weights in ``{1..w_max}^n``.

    Full enumeration when ``w_max ** n`` is at most ``GRID_FULL_LIMIT``,
    otherwise ``samples`` random vectors. The first vector in lexicographic
    order reaching the minimum is returned.
    """
    n = g.n
    if n <= 1:
        return 0, Witness(g, [1] * n, ())
    flags = [1 if p in g.edges else 0 for p in g.pairs()]
    target = 1 if g.m else 0
    if w_max ** n <= GRID_FULL_LIMIT:
        best_k, idx = kernels.grid_scan(n, flags, w_max, target)
        if best_k < 0:
            return None
        weights = []
        for _ in range(n):
            weights.append(idx % w_max + 1)
            idx //= w_max
        weights.reverse()
    else:
        from ._pykernels import _runs_for_block

        rng = np.random.default_rng(seed)
        cand = rng.integers(1, w_max + 1, size=(samples, n))
        pi, pj = zip(*g.pairs())
        sums = cand[:, list(pi)] + cand[:, list(pj)]
        fl = np.asarray(flags, dtype=bool)
        runs = _runs_for_block(sums, np.flatnonzero(fl), np.flatnonzero(~fl), 2 * w_max)
        ok = np.flatnonzero(runs >= 0)
        if not ok.size:
            return None
        best = ok[np.argmin(runs[ok])]
        weights = [int(x) for x in cand[best]]
    k, intervals = min_intervals(g, weights)
    w = Witness(g, weights, intervals)
    assert verify(w).valid
    return k, w


def random_valid_witness(g: Graph, rng: random.Random, w_max: int = 12, tries: int = 2000) -> Witness | None:
    """Random integer weights that admit some interval set, or ``None``."""
    for _ in range(tries):
        weights = [rng.randint(1, w_max) for _ in range(g.n)]
        res = min_intervals(g, weights)
        if res is not None:
            return Witness(g, weights, res[1])
    return None

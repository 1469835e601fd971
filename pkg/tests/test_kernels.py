import itertools
import random

import pytest

from starpcg import kernels
from starpcg.families import cycle_graph
from starpcg.graph import all_labeled_graphs

BACKENDS = kernels.backends()
needs_compiled = pytest.mark.skipif("compiled" not in BACKENDS, reason="extension not built")


def _collect(mod, parity, n, top, left_free, budget=10**7):
    seen = []
    nodes, status = mod.enumerate_slots(parity, n, top, left_free, lambda s: seen.append(tuple(s)) and False, budget)
    return nodes, status, seen


def _brute_matrices(parity, n, top, left_free):
    cells = [(i, j) for i in range(n) for j in range(i + 1, n)]
    idx = {c: t for t, c in enumerate(cells)}
    out = []
    choices = [range(p, top + 1, 2) for p in parity]
    for slots in itertools.product(*choices):
        if slots[0] != parity[0] or (left_free and parity[0] != 1):
            continue
        ok = all(
            slots[t] >= slots[idx[(i, j - 1)]] if j - 1 > i else True for t, (i, j) in enumerate(cells)
        ) and all(slots[t] >= slots[idx[(i - 1, j)]] if i > 0 else True for t, (i, j) in enumerate(cells))
        if ok:
            out.append(slots)
    return out


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_enumeration_matches_brute_force(name):
    mod = BACKENDS[name]
    rng = random.Random(1)
    for n in (2, 3, 4):
        ncell = n * (n - 1) // 2
        for _ in range(15):
            parity = [rng.randint(0, 1) for _ in range(ncell)]
            for top, lf in ((2, False), (4, False), (4, True)):
                _, status, seen = _collect(mod, parity, n, top, lf)
                assert status == kernels.EXHAUSTED
                assert sorted(seen) == sorted(_brute_matrices(parity, n, top, lf))


@needs_compiled
def test_enumeration_parity_between_backends():
    py, c = BACKENDS["python"], BACKENDS["compiled"]
    g = cycle_graph(6)
    parity = [1 if p in g.edges else 0 for p in g.pairs()]
    for top in (2, 4):
        assert _collect(py, parity, 6, top, False) == _collect(c, parity, 6, top, False)
        assert _collect(py, parity, 6, top, False, budget=100) == _collect(c, parity, 6, top, False, budget=100)


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_enumeration_stop_and_budget(name):
    mod = BACKENDS[name]
    parity = [1, 0, 1]
    nodes, status = mod.enumerate_slots(parity, 3, 4, False, lambda s: True, 100)
    assert status == kernels.STOPPED
    nodes, status = mod.enumerate_slots(parity, 3, 8, False, lambda s: False, 2)
    assert status == kernels.OVER_BUDGET
    assert mod.enumerate_slots([0], 2, 2, True, lambda s: True, 10) == (0, kernels.EXHAUSTED)
    assert mod.enumerate_slots([], 1, 2, False, lambda s: True, 10) == (0, kernels.STOPPED)


@needs_compiled
def test_grid_scan_parity_between_backends():
    py, c = BACKENDS["python"], BACKENDS["compiled"]
    for g in list(all_labeled_graphs(4))[::5]:
        flags = [1 if p in g.edges else 0 for p in g.pairs()]
        target = 1 if g.m else 0
        for w_max in (3, 5):
            assert py.grid_scan(4, flags, w_max, target, block=37) == c.grid_scan(4, flags, w_max, target)
            assert py.grid_scan(4, flags, w_max, -1) == c.grid_scan(4, flags, w_max, -1)


def test_backend_selected():
    assert kernels.BACKEND in BACKENDS

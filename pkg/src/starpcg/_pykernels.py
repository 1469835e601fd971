"""Pure-Python kernels; same contracts and enumeration order as ``_ckernels``."""
from __future__ import annotations

import numpy as np

EXHAUSTED, STOPPED, OVER_BUDGET = 0, 1, 2


def enumerate_slots(parity, n, top, left_free, callback, budget):
    """Depth-first over monotone slot matrices of the upper triangle.

    Cells ``(i, j)``, ``i < j``, are numbered row-major. ``parity[c]`` is 1 for
    an edge and 0 for a non-edge; a cell's slot must have that parity, lie in
    ``0..top`` and be at least the slots of ``(i, j-1)`` and ``(i-1, j)``. The
    first cell takes its parity value (lower start slots are a pure shift).
    With ``left_free`` the first cell must be an edge.

    ``callback(slots)`` runs at each complete matrix; a true return stops the
    search. Returns ``(nodes, status)``.
    """
    cells = [(i, j) for i in range(n) for j in range(i + 1, n)]
    ncell = len(cells)
    if ncell == 0:
        stop = callback([])
        return 0, STOPPED if stop else EXHAUSTED
    if left_free and not parity[0]:
        return 0, EXHAUSTED
    index = {c: t for t, c in enumerate(cells)}
    left = [index.get((i, j - 1), -1) if j - 1 > i else -1 for i, j in cells]
    up = [index.get((i - 1, j), -1) if i > 0 else -1 for i, j in cells]
    slots = [0] * ncell
    nodes = 0
    # value[t] is the next candidate for cell t; -1 means "start from the floor"
    t = 0
    value = [-1] * ncell
    while t >= 0:
        if value[t] < 0:
            lo = 0
            if left[t] >= 0 and slots[left[t]] > lo:
                lo = slots[left[t]]
            if up[t] >= 0 and slots[up[t]] > lo:
                lo = slots[up[t]]
            if (lo & 1) != parity[t]:
                lo += 1
            v = lo
        else:
            v = value[t] + 2
        if t == 0 and v > parity[0]:
            v = top + 1
        if v > top:
            value[t] = -1
            t -= 1
            continue
        value[t] = v
        slots[t] = v
        nodes += 1
        if nodes > budget:
            return nodes, OVER_BUDGET
        if t == ncell - 1:
            if callback(list(slots)):
                return nodes, STOPPED
        else:
            t += 1
    return nodes, EXHAUSTED


def _runs_for_block(sums, edge_cols, non_cols, smax):
    """Interval counts for a block of integer weight vectors; -1 marks a tie conflict."""
    rows = sums.shape[0]
    runs = np.zeros(rows, dtype=np.int64)
    conflict = np.zeros(rows, dtype=bool)
    last = np.zeros(rows, dtype=np.int8)  # 0 nothing yet, 1 edge, 2 non-edge
    es = sums[:, edge_cols]
    ns = sums[:, non_cols]
    for s in range(2, smax + 1):
        has_e = (es == s).any(axis=1) if edge_cols.size else np.zeros(rows, dtype=bool)
        has_n = (ns == s).any(axis=1) if non_cols.size else np.zeros(rows, dtype=bool)
        conflict |= has_e & has_n
        runs += has_e & (last != 1)
        last = np.where(has_e, 1, np.where(has_n, 2, last)).astype(np.int8)
    runs[conflict] = -1
    return runs


def grid_scan(n, edge_flags, w_max, target, start=0, stop=None, block=1 << 15):
    """Scan weight vectors in ``{1..w_max}^n`` in lexicographic order.

    Vector ``idx`` has ``w_v = digit_v + 1`` with ``v = 0`` the most significant
    base-``w_max`` digit. Returns ``(best_k, best_idx)`` for the first vector
    reaching the minimum interval count, stopping early once ``best_k <= target``;
    ``(-1, -1)`` when every vector has a tie conflict.
    """
    total = w_max ** n if stop is None else stop
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    flags = np.asarray(edge_flags, dtype=bool)
    edge_cols = np.flatnonzero(flags)
    non_cols = np.flatnonzero(~flags)
    pi = np.array([p[0] for p in pairs], dtype=np.int64)
    pj = np.array([p[1] for p in pairs], dtype=np.int64)
    powers = w_max ** np.arange(n - 1, -1, -1, dtype=np.int64)
    best_k, best_idx = -1, -1
    for lo in range(start, total, block):
        idx = np.arange(lo, min(lo + block, total), dtype=np.int64)
        weights = (idx[:, None] // powers[None, :]) % w_max + 1
        sums = weights[:, pi] + weights[:, pj]
        runs = _runs_for_block(sums, edge_cols, non_cols, 2 * w_max)
        ok = np.flatnonzero(runs >= 0)
        if ok.size:
            hit = ok[runs[ok] <= target]
            j = hit[0] if hit.size else ok[np.argmin(runs[ok])]
            if best_k < 0 or runs[j] < best_k:
                best_k, best_idx = int(runs[j]), int(idx[j])
                if best_k <= target:
                    break
    return best_k, best_idx

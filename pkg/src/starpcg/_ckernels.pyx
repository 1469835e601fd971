# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; mirror ``_pykernels`` exactly, including enumeration order."""
from libc.stdlib cimport malloc, free

cdef enum:
    MAXCELL = 512

cdef int EXHAUSTED = 0
cdef int STOPPED = 1
cdef int OVER_BUDGET = 2


def enumerate_slots(parity, int n, int top, bint left_free, callback, long long budget):
    cdef int ncell = n * (n - 1) // 2
    cdef int[MAXCELL] par, left, up, slots, value
    cdef int i, j, t, v, lo, c
    cdef long long nodes = 0
    if ncell == 0:
        return 0, (STOPPED if callback([]) else EXHAUSTED)
    if ncell > MAXCELL:
        raise ValueError("too many cells")
    if left_free and not parity[0]:
        return 0, EXHAUSTED
    c = 0
    for i in range(n):
        for j in range(i + 1, n):
            par[c] = 1 if parity[c] else 0
            # row-major index of (i, j) is i*n - i*(i+1)/2 + (j - i - 1)
            left[c] = c - 1 if j - 1 > i else -1
            up[c] = (i - 1) * n - (i - 1) * i // 2 + (j - i) if i > 0 else -1
            value[c] = -1
            c += 1
    t = 0
    while t >= 0:
        if value[t] < 0:
            lo = 0
            if left[t] >= 0 and slots[left[t]] > lo:
                lo = slots[left[t]]
            if up[t] >= 0 and slots[up[t]] > lo:
                lo = slots[up[t]]
            if (lo & 1) != par[t]:
                lo += 1
            v = lo
        else:
            v = value[t] + 2
        if t == 0 and v > par[0]:
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
            if callback([slots[c] for c in range(ncell)]):
                return nodes, STOPPED
        else:
            t += 1
    return nodes, EXHAUSTED


def grid_scan(int n, edge_flags, int w_max, int target, long long start=0, stop=None, block=None):
    cdef int npair = n * (n - 1) // 2
    cdef int smax = 2 * w_max
    cdef long long total
    cdef long long idx, rem
    cdef int p, s, k, best_k = -1, v, last, j
    cdef long long best_idx = -1
    cdef int *pi = <int *> malloc(npair * sizeof(int) + 1)
    cdef int *pj = <int *> malloc(npair * sizeof(int) + 1)
    cdef int *isedge = <int *> malloc(npair * sizeof(int) + 1)
    cdef int *w = <int *> malloc(n * sizeof(int) + 1)
    # per-sum marks: bit 1 edge present, bit 2 non-edge present
    cdef int *mark = <int *> malloc((smax + 1) * sizeof(int))
    cdef bint conflict
    if stop is None:
        total = 1
        for v in range(n):
            total *= w_max
    else:
        total = stop
    try:
        p = 0
        for v in range(n):
            for j in range(v + 1, n):
                pi[p] = v
                pj[p] = j
                isedge[p] = 1 if edge_flags[p] else 0
                p += 1
        for idx in range(start, total):
            rem = idx
            for v in range(n - 1, -1, -1):
                w[v] = <int>(rem % w_max) + 1
                rem //= w_max
            for s in range(smax + 1):
                mark[s] = 0
            conflict = False
            for p in range(npair):
                s = w[pi[p]] + w[pj[p]]
                mark[s] |= 1 if isedge[p] else 2
                if mark[s] == 3:
                    conflict = True
                    break
            if conflict:
                continue
            k = 0
            last = 0
            for s in range(2, smax + 1):
                if mark[s] == 1:
                    if last != 1:
                        k += 1
                    last = 1
                elif mark[s] == 2:
                    last = 2
            if best_k < 0 or k < best_k:
                best_k = k
                best_idx = idx
                if best_k <= target:
                    break
    finally:
        free(pi)
        free(pj)
        free(isedge)
        free(w)
        free(mark)
    return best_k, best_idx

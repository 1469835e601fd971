"""Rewrites of a witness that keep the certified graph and the interval count."""
from __future__ import annotations

from fractions import Fraction

from .errors import InternalInvariantError, InvalidWitnessError
from .witness import (
    Witness,
    as_fraction,
    normal_form_violators,
    require_valid,
    verify,
)


def _checked(w: Witness, what: str) -> Witness:
    report = verify(w)
    if not report.valid:
        raise InternalInvariantError(f"{what} produced an invalid witness: {report.describe()}", w)
    return w


def default_mirror_center(w: Witness) -> Fraction:
    top = max(w.weights, default=Fraction(0))
    if w.intervals and w.intervals[-1].hi > top:
        return w.intervals[-1].hi
    return top + 1


def mirror(w: Witness, c=None) -> Witness:
    """Reflect weights around ``c``: ``w'(u) = c - w(u)``, intervals around ``2c``.

    Left-free witnesses become right-free and vice versa. ``c`` defaults to
    the top of the last interval, bumped to ``max weight + 1`` when that would
    leave a zero weight.
    """
    require_valid(w)
    c = default_mirror_center(w) if c is None else as_fraction(c)
    if any(x >= c for x in w.weights):
        raise ValueError(f"mirror center {c} must exceed every weight")
    intervals = [(2 * c - iv.hi, 2 * c - iv.lo) for iv in reversed(w.intervals)]
    if intervals and intervals[0][0] <= 0:
        raise ValueError(f"mirror center {c} reflects an interval below zero")
    out = w.replace(weights=[c - x for x in w.weights], intervals=intervals)
    return _checked(out, "mirror")


def _positive_min(values):
    pos = [v for v in values if v > 0]
    return min(pos) if pos else None


def _shift_vertex(w: Witness, x: int, eps: Fraction) -> Witness:
    weights = list(w.weights)
    weights[x] += eps
    intervals = [(iv.lo, iv.hi + eps) for iv in w.intervals]
    return w.replace(weights=weights, intervals=intervals)


def normalize_step_epsilon(w: Witness, x: int) -> Fraction:
    ws = w.weights
    n = len(ws)
    ends = [e for iv in w.intervals for e in iv]
    d1 = _positive_min(
        [abs(w.pair_sum(u, v) - e) for u, v in w.graph.non_edges() for e in ends]
        # keeps a raised top below the next interval when the gap holds no non-edge
        + [b.lo - a.hi for a, b in zip(w.intervals, w.intervals[1:])]
    )
    d2 = _positive_min(abs(ws[x] - ws[y]) for y in range(n))
    triples = []
    for u1 in range(n):
        for u2 in range(n):
            for u3 in range(u2 + 1, n):
                if x in (u1, u2, u3):
                    triples.append(abs(2 * ws[u1] - ws[u2] - ws[u3]))
    d3 = _positive_min(triples)
    deltas = [d for d in (d1, d2, d3) if d is not None]
    if not deltas:
        # no non-edge near an endpoint and nothing to collide with: any
        # positive shift works
        return ws[x] / 4
    return min(deltas) / 4


def normalize(w: Witness) -> Witness:
    """Perturb weights until no two vertices tie and no ``2 w(x)`` equals a pair sum.

    One violating vertex at a time (the highest-indexed) is raised by a
    quarter of the smallest relevant gap, and every interval's top is raised
    by the same amount. The violator count must drop every round.
    """
    require_valid(w)
    bad = normal_form_violators(w.weights)
    while bad:
        x = bad[-1]
        eps = normalize_step_epsilon(w, x)
        nxt = _shift_vertex(w, x, eps)
        report = verify(nxt)
        if not report.valid:
            raise InternalInvariantError(
                f"normalize step on vertex {x} broke validity: {report.describe()}", nxt
            )
        new_bad = normal_form_violators(nxt.weights)
        if len(new_bad) >= len(bad):
            raise InternalInvariantError(
                f"normalize step on vertex {x} did not reduce violators ({len(bad)} -> {len(new_bad)})",
                nxt,
            )
        w, bad = nxt, new_bad
    return w


def _tied_pairs(w: Witness):
    """First two distinct pairs with equal sums, in pair order, or ``None``."""
    seen = {}
    for p in w.graph.pairs():
        s = w.pair_sum(*p)
        if s in seen:
            return seen[s], p
        seen[s] = p
    return None


def separate_pair_sums(w: Witness) -> Witness:
    """Make all pair sums distinct without changing the graph or interval count."""
    require_valid(w)
    while True:
        tie = _tied_pairs(w)
        if tie is None:
            return w
        p, q = tie
        # perturb a vertex in exactly one of the two pairs to break this tie
        x = max(set(q) - set(p))
        values = sorted({w.pair_sum(u, v) for u, v in w.graph.pairs()} | {e for iv in w.intervals for e in iv})
        gaps = [b - a for a, b in zip(values, values[1:])]
        gap = min(gaps) if gaps else max(w.weights)
        w = _checked(_shift_vertex(w, x, gap / 8), "separate_pair_sums")

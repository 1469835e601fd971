"""Graph operations lifted to witnesses.

Each operation takes a valid witness of ``G`` and returns a valid witness of
the modified graph plus an :class:`OpReport`. New vertices get the next free
labels ``n, n+1, ...``. Every output is verified before it is returned.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalInvariantError
from .graph import Graph, complement_graph
from .transforms import mirror, normalize
from .witness import (
    Interval,
    VerifyReport,
    Witness,
    classify_free,
    normal_form_violators,
    require_valid,
    verify,
)


@dataclass(frozen=True)
class OpReport:
    op: str
    case: str
    k_before: int
    k_after: int
    fallback_used: bool
    verification: VerifyReport
    input_free: str | None = None

    def k_bound(self) -> int:
        """Largest ``k_after`` the construction promises for this case."""
        if self.op == "isolated":
            return self.k_before
        if self.op == "universal" and self.case.startswith("universal/free"):
            return self.k_before
        if self.op == "complement" and self.input_free == "both_free":
            return self.k_before - 1
        if self.op == "complement" and self.input_free in ("left_free", "right_free"):
            return self.k_before
        return self.k_before + 1


def _finish(op, case, before: Witness, after: Witness, fallback=False, free=None) -> tuple[Witness, OpReport]:
    report = verify(after)
    if not report.valid:
        raise InternalInvariantError(f"{op} ({case}) produced an invalid witness: {report.describe()}", after)
    return after, OpReport(op, case, before.k, after.k, fallback, report, free)


def _extend_graph(g: Graph, new_edges, count: int) -> Graph:
    return Graph(g.n + count, g.edges | frozenset(new_edges))


def add_isolated(w: Witness) -> tuple[Witness, OpReport]:
    require_valid(w)
    x = w.intervals[-1].hi + 1 if w.intervals else Fraction(1)
    out = Witness(_extend_graph(w.graph, (), 1), w.weights + (x,), w.intervals)
    return _finish("isolated", "isolated", w, out)


def _universal_not_free(w: Witness) -> Witness:
    g, ws, n = w.graph, w.weights, w.graph.n
    sums = [ws[u] + ws[v] for u, v in g.pairs()]
    top = max(sums + ([w.intervals[-1].hi] if w.intervals else []), default=Fraction(0))
    x = top + 1
    lo = x + min(ws, default=Fraction(0))
    hi = x + max(ws, default=Fraction(0))
    intervals = list(w.intervals) + ([Interval(lo, hi)] if n else [])
    new_g = _extend_graph(g, ((v, n) for v in range(n)), 1)
    return Witness(new_g, ws + (x,), intervals)


def _universal_free(w: Witness) -> Witness:
    """``w`` must be right-free: every pair sum is at most ``b_k``."""
    g, n = w.graph, w.graph.n
    bk = w.intervals[-1].hi
    x = bk + 1
    intervals = list(w.intervals[:-1]) + [Interval(w.intervals[-1].lo, 2 * bk + 1)]
    new_g = _extend_graph(g, ((v, n) for v in range(n)), 1)
    return Witness(new_g, w.weights + (x,), intervals)


def add_universal(w: Witness) -> tuple[Witness, OpReport]:
    """Add a vertex adjacent to all others.

    Free witnesses keep ``k`` (left-free inputs are mirrored first); other
    witnesses get one new interval holding exactly the new sums.
    """
    require_valid(w)
    if w.graph.n == 0:
        raise ValueError("add_universal needs a nonempty graph")
    tag = classify_free(w) if w.intervals else "not_free"
    if tag != "not_free":
        base, case = w, "universal/free"
        if tag == "left_free":
            base, case = mirror(w), "universal/free-mirrored"
        candidate = _universal_free(base)
        if verify(candidate).valid:
            return _finish("universal", case, w, candidate, free=tag)
        return _finish("universal", "universal/non-free", w, _universal_not_free(w), fallback=True, free=tag)
    return _finish("universal", "universal/non-free", w, _universal_not_free(w), free=tag)


def _distinct_weights(w: Witness) -> bool:
    return len(set(w.weights)) == len(w.weights)


def add_pendants(w: Witness, anchors) -> tuple[Witness, OpReport]:
    """Hang one new leaf on each entry of ``anchors`` (repeats allowed).

    The leaf on ``v`` gets weight ``2M - w(v)``, so every pendant edge sums to
    exactly ``2M`` and one point interval covers them all. For a free input the
    merge of that point into the top interval is tried and kept only if it
    verifies.
    """
    require_valid(w)
    anchors = list(anchors)
    n = w.graph.n
    for a in anchors:
        if not 0 <= a < n:
            raise ValueError(f"anchor {a} out of range for n={n}")
    if not anchors:
        return _finish("pendant", "pendant/identity", w, w)
    normalized = False
    if not _distinct_weights(w):
        w_in, w = w, normalize(w)
        normalized = True
    else:
        w_in = w

    def build(base: Witness, merge: bool) -> Witness:
        top_w = max(base.weights)
        bk = base.intervals[-1].hi if base.intervals else top_w
        m = max(top_w, bk) + 1
        leaves = [2 * m - base.weights[a] for a in anchors]
        new_edges = [(a, n + i) for i, a in enumerate(anchors)]
        g = _extend_graph(base.graph, new_edges, len(anchors))
        if merge and base.intervals:
            intervals = list(base.intervals[:-1]) + [Interval(base.intervals[-1].lo, 2 * m)]
        else:
            intervals = list(base.intervals) + [Interval(2 * m, 2 * m)]
        return Witness(g, base.weights + tuple(leaves), intervals)

    tag = classify_free(w) if w.intervals else "not_free"
    suffix = "/normalized" if normalized else ""
    if tag != "not_free":
        base = w if tag in ("right_free", "both_free") else mirror(w)
        merged = build(base, merge=True)
        if verify(merged).valid:
            return _finish("pendant", "pendant/free-merged" + suffix, w_in, merged)
        return _finish("pendant", "pendant/free-unmerged" + suffix, w_in, build(w, merge=False))
    return _finish("pendant", "pendant/non-free" + suffix, w_in, build(w, merge=False))


def _prepare_twin(w: Witness, v: int, count: int) -> tuple[Witness, bool]:
    require_valid(w)
    if not 0 <= v < w.graph.n:
        raise ValueError(f"vertex {v} out of range for n={w.graph.n}")
    if count < 1:
        raise ValueError("count must be at least 1")
    # the constructions only need v itself to satisfy the normal-form conditions
    if v in normal_form_violators(w.weights):
        return normalize(w), True
    return w, False


def add_false_twins(w: Witness, v: int, count: int = 1) -> tuple[Witness, OpReport]:
    """Add ``count`` copies of ``v`` with the same neighbourhood (not adjacent to ``v``)."""
    w_in = w
    w, normalized = _prepare_twin(w, v, count)
    n, wv = w.graph.n, w.weights[v]
    new = range(n, n + count)
    g = _extend_graph(w.graph, [(u, x) for x in new for u in w.graph.neighbors(v)], count)
    target = 2 * wv
    intervals = list(w.intervals)
    suffix = "/normalized" if normalized else ""
    hit = next((i for i, iv in enumerate(intervals) if target in iv), None)
    if hit is None:
        case = "twin/unchanged"
    else:
        a, b = intervals[hit]
        inside = [w.pair_sum(p, q) for p, q in w.graph.edges if w.pair_sum(p, q) in intervals[hit]]
        eps = min((abs(target - s) for s in inside), default=None)
        if eps is None:
            # an interval holding no edge sum can simply go
            pieces = []
            case = "twin/drop-empty"
        elif target - eps / 2 <= a:
            pieces = [Interval(target + eps / 2, b)]
            case = "twin/truncate-low"
        elif target + eps / 2 >= b:
            pieces = [Interval(a, target - eps / 2)]
            case = "twin/truncate-high"
        else:
            pieces = [Interval(a, target - eps / 2), Interval(target + eps / 2, b)]
            case = "twin/split"
        intervals[hit:hit + 1] = pieces
    out = Witness(g, w.weights + (wv,) * count, intervals)
    return _finish("false-twin", case + suffix, w_in, out)


def add_true_twins(w: Witness, v: int, count: int = 1) -> tuple[Witness, OpReport]:
    """Add ``count`` copies of ``v`` adjacent to ``v``, to its neighbours and to each other."""
    w_in = w
    w, normalized = _prepare_twin(w, v, count)
    n, wv = w.graph.n, w.weights[v]
    new = list(range(n, n + count))
    closed = set(w.graph.neighbors(v)) | {v}
    edges = [(u, x) for x in new for u in closed]
    edges += [(x, y) for i, x in enumerate(new) for y in new[i + 1:]]
    g = _extend_graph(w.graph, edges, count)
    target = 2 * wv
    intervals = list(w.intervals)
    suffix = "/normalized" if normalized else ""
    if w.in_union(target):
        case = "twin/unchanged"
    else:
        intervals.append(Interval(target, target))
        intervals.sort()
        case = "twin/point"
    out = Witness(g, w.weights + (wv,) * count, intervals)
    return _finish("true-twin", case + suffix, w_in, out)


def complement_witness(w: Witness) -> tuple[Witness, OpReport]:
    """Same weights; one tight interval per gap of the old union that holds a non-edge sum."""
    require_valid(w)
    free = classify_free(w)
    non = sorted(w.non_edge_sums())
    bounds = [Fraction(0)] + [e for iv in w.intervals for e in iv] + [None]
    intervals = []
    # gaps are (0, a_1), (b_1, a_2), ..., (b_k, inf)
    for lo, hi in zip(bounds[0::2], bounds[1::2]):
        inside = [s for s in non if s > lo and (hi is None or s < hi)]
        if inside:
            intervals.append(Interval(inside[0], inside[-1]))
    out = Witness(complement_graph(w.graph), w.weights, intervals)
    return _finish("complement", "complement/gaps", w, out, free=free)

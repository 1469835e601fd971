"""Witness certificates and the checks that run on them.

A witness is a graph together with positive rational vertex weights and a
strictly increasing list of disjoint closed intervals. It certifies the graph
when every pair sum ``w(u) + w(v)`` lies in the union of the intervals exactly
for the edges ``uv``.

Everything here is exact: weights and endpoints are ``fractions.Fraction``.
"""
from __future__ import annotations

import bisect
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import InvalidWitnessError, ParseError, WitnessStructureError
from .graph import Graph

FREE_TAGS = ("left_free", "right_free", "both_free", "not_free")


class Interval(NamedTuple):
    lo: Fraction
    hi: Fraction

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted in certificate data; use Fraction or str")
    return Fraction(x)


@dataclass(frozen=True)
class Witness:
    graph: Graph
    weights: tuple
    intervals: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(as_fraction(w) for w in self.weights))
        object.__setattr__(
            self,
            "intervals",
            tuple(Interval(as_fraction(lo), as_fraction(hi)) for lo, hi in self.intervals),
        )
        if len(self.weights) != self.graph.n:
            raise WitnessStructureError(
                f"{len(self.weights)} weights for a graph on {self.graph.n} vertices"
            )

    @property
    def k(self) -> int:
        return len(self.intervals)

    def pair_sum(self, u: int, v: int) -> Fraction:
        return self.weights[u] + self.weights[v]

    def in_union(self, s) -> bool:
        # intervals are sorted and disjoint
        i = bisect.bisect_right([iv.lo for iv in self.intervals], s) - 1
        return i >= 0 and s <= self.intervals[i].hi

    def edge_sums(self) -> list:
        return [self.pair_sum(u, v) for u, v in sorted(self.graph.edges)]

    def non_edge_sums(self) -> list:
        return [self.pair_sum(u, v) for u, v in self.graph.non_edges()]

    def replace(self, graph=None, weights=None, intervals=None) -> "Witness":
        return Witness(
            self.graph if graph is None else graph,
            self.weights if weights is None else weights,
            self.intervals if intervals is None else intervals,
        )


def check_structure(w: Witness) -> None:
    """Raise :class:`WitnessStructureError` unless weights and intervals are well formed."""
    for v, x in enumerate(w.weights):
        if x <= 0:
            raise WitnessStructureError(f"weight of vertex {v} is {x}, must be positive")
    prev = None
    for i, iv in enumerate(w.intervals):
        if not 0 < iv.lo <= iv.hi:
            raise WitnessStructureError(f"interval {i} = [{iv.lo}, {iv.hi}] needs 0 < lo <= hi")
        if prev is not None and not prev.hi < iv.lo:
            raise WitnessStructureError(f"intervals {i - 1} and {i} overlap or are out of order")
        prev = iv


class Violation(NamedTuple):
    pair: tuple
    sum: Fraction
    expected: str  # "in" for an edge outside the union, "out" for a non-edge inside it


@dataclass(frozen=True)
class VerifyReport:
    valid: bool
    violations: tuple = ()

    def __bool__(self):
        return self.valid

    def describe(self) -> str:
        if self.valid:
            return "valid"
        parts = [
            f"{u}-{v}: sum {s} expected-{exp}" for (u, v), s, exp in self.violations
        ]
        return "invalid: " + "; ".join(parts)


def verify(w: Witness) -> VerifyReport:
    """Check every pair; list every violation."""
    check_structure(w)
    violations = []
    for u, v in w.graph.pairs():
        s = w.pair_sum(u, v)
        inside = w.in_union(s)
        is_edge = (u, v) in w.graph.edges
        if is_edge and not inside:
            violations.append(Violation((u, v), s, "in"))
        elif not is_edge and inside:
            violations.append(Violation((u, v), s, "out"))
    return VerifyReport(not violations, tuple(violations))


def require_valid(w: Witness, what: str = "witness") -> VerifyReport:
    report = verify(w)
    if not report.valid:
        raise InvalidWitnessError(f"{what} does not certify its graph: {report.describe()}", report)
    return report


def min_intervals(g: Graph, weights: Sequence) -> tuple[int, tuple] | None:
    """Fewest intervals that work for fixed weights, or ``None`` if none exist.

    Sorted distinct edge sums are grouped into maximal runs whose closed span
    contains no non-edge sum; each run becomes one tight interval.
    """
    ws = [as_fraction(x) for x in weights]
    edge_sums = sorted({ws[u] + ws[v] for u, v in g.edges})
    non_sums = sorted({ws[u] + ws[v] for u, v in g.non_edges()})
    if set(edge_sums) & set(non_sums):
        return None
    runs = []
    for s in edge_sums:
        if runs:
            lo, hi = runs[-1]
            # a non-edge strictly between hi and s splits the run
            j = bisect.bisect_right(non_sums, hi)
            if j < len(non_sums) and non_sums[j] < s:
                runs.append([s, s])
            else:
                runs[-1][1] = s
        else:
            runs.append([s, s])
    return len(runs), tuple(Interval(lo, hi) for lo, hi in runs)


def canonicalize(w: Witness) -> Witness:
    """Merge gaps that hold no non-edge sum and shrink intervals to their edge sums."""
    require_valid(w)
    result = min_intervals(w.graph, w.weights)
    assert result is not None  # a valid witness has no edge/non-edge tie
    return w.replace(intervals=result[1])


def classify_free(w: Witness) -> str:
    """``left_free``, ``right_free``, ``both_free`` or ``not_free``.

    Left-free: every non-edge sum exceeds the top of the first interval.
    Right-free: every non-edge sum is below the bottom of the last interval.
    A witness without non-edges is both. A witness without intervals but with
    non-edges is not free.
    """
    require_valid(w)
    non = w.non_edge_sums()
    if not non:
        return "both_free"
    if not w.intervals:
        return "not_free"
    left = min(non) > w.intervals[0].hi
    right = max(non) < w.intervals[-1].lo
    if left and right:
        return "both_free"
    if left:
        return "left_free"
    if right:
        return "right_free"
    return "not_free"


def normal_form_violators(weights: Sequence) -> list[int]:
    """Vertices breaking the normal form.

    ``x`` violates when another vertex shares its weight, or when some pair of
    distinct vertices (``x`` allowed among them) sums to ``2 w(x)``.
    """
    ws = [as_fraction(x) for x in weights]
    n = len(ws)
    sums = {ws[i] + ws[j] for i in range(n) for j in range(i + 1, n)}
    counts = {}
    for x in ws:
        counts[x] = counts.get(x, 0) + 1
    return [x for x in range(n) if counts[ws[x]] > 1 or 2 * ws[x] in sums]


def check_normal_form(w) -> tuple[bool, list[int]]:
    weights = w.weights if isinstance(w, Witness) else w
    bad = normal_form_violators(weights)
    return not bad, bad


# ---------------------------------------------------------------------------
# JSON


def _frac_str(x: Fraction) -> str:
    return str(x)  # Fraction.__str__ is reduced "p/q", or "p" for integers


def _parse_frac(text, where) -> Fraction:
    if not isinstance(text, (str, int)) or isinstance(text, bool):
        raise ParseError(f"expected a rational string, got {text!r}", where=where)
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad rational {text!r}", where=where) from None
    if isinstance(text, str) and "." in text:
        raise ParseError(f"decimal notation not allowed: {text!r}", where=where)
    return value


def witness_to_dict(w: Witness) -> dict:
    return {
        "n": w.graph.n,
        "edges": [[u, v] for u, v in sorted(w.graph.edges)],
        "weights": {str(v): _frac_str(x) for v, x in enumerate(w.weights)},
        "intervals": [[_frac_str(iv.lo), _frac_str(iv.hi)] for iv in w.intervals],
    }


def witness_from_dict(d: dict) -> Witness:
    try:
        n = d["n"]
        raw_edges = d["edges"]
        raw_weights = d["weights"]
        raw_intervals = d["intervals"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"missing witness field {exc}") from None
    if not isinstance(n, int) or n < 0:
        raise ParseError(f"bad vertex count {n!r}", where="n")
    g = Graph.from_edges(n, [tuple(e) for e in raw_edges])
    if sorted(raw_weights, key=int) != [str(v) for v in range(n)]:
        raise ParseError("weights must be keyed by every vertex 0..n-1", where="weights")
    weights = [_parse_frac(raw_weights[str(v)], f"weights[{v}]") for v in range(n)]
    intervals = [
        (_parse_frac(lo, f"intervals[{i}][0]"), _parse_frac(hi, f"intervals[{i}][1]"))
        for i, (lo, hi) in enumerate(raw_intervals)
    ]
    w = Witness(g, weights, intervals)
    check_structure(w)
    return w


def dumps_witness(w: Witness, **kwargs) -> str:
    return json.dumps(witness_to_dict(w), **kwargs)


def loads_witness(text: str) -> Witness:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, where=f"line {exc.lineno} col {exc.colno}") from None
    return witness_from_dict(data)


def integerize(w: Witness) -> Witness:
    """Scale by the LCM of all denominators; validity is scale invariant."""
    from math import lcm

    den = 1
    for x in list(w.weights) + [e for iv in w.intervals for e in iv]:
        den = lcm(den, x.denominator)
    return w.replace(
        weights=[x * den for x in w.weights],
        intervals=[(iv.lo * den, iv.hi * den) for iv in w.intervals],
    )


def relabel_witness(w: Witness, mapping) -> Witness:
    """Vertex ``v`` becomes ``mapping[v]``."""
    weights = [None] * w.graph.n
    for v, x in enumerate(w.weights):
        weights[mapping[v]] = x
    return Witness(w.graph.relabel(mapping), weights, w.intervals)

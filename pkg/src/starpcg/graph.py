"""Simple undirected graphs on dense vertex labels ``0..n-1``.

Covers ingestion (graph6 and a plain edge list), complement, BFS radius and
centers, tree-family classification and the labeled small-graph census.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple

from .errors import GraphValidationError, ParseError

GRAPH6_MAX_N = 62


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise GraphValidationError(f"negative vertex count {self.n}")
        normalized = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphValidationError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphValidationError(f"edge {u}-{v} out of range for n={self.n}")
            normalized.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "Graph":
        """Build a graph, rejecting duplicates (which a frozenset would hide)."""
        seen = set()
        for u, v in edges:
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphValidationError(f"duplicate edge {key[0]}-{key[1]}")
            seen.add(key)
            if u == v:
                raise GraphValidationError(f"loop at vertex {u}")
        return cls(n, frozenset(seen))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"

    @cached_property
    def adjacency(self) -> tuple:
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def neighbors(self, v: int) -> frozenset:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    @property
    def m(self) -> int:
        return len(self.edges)

    def pairs(self) -> Iterator[tuple]:
        return itertools.combinations(range(self.n), 2)

    def non_edges(self) -> list:
        return [p for p in self.pairs() if p not in self.edges]

    def relabel(self, mapping) -> "Graph":
        """Vertex ``v`` becomes ``mapping[v]``; ``mapping`` must be a permutation."""
        return Graph(self.n, frozenset((mapping[u], mapping[v]) for u, v in self.edges))

    def induced(self, vertices) -> tuple["Graph", list]:
        """Induced subgraph on ``vertices`` relabeled ``0..len-1``; also returns the old labels."""
        old = list(vertices)
        index = {v: i for i, v in enumerate(old)}
        sub = frozenset(
            (index[u], index[v]) for u, v in self.edges if u in index and v in index
        )
        return Graph(len(old), sub), old


def complement_graph(g: Graph) -> Graph:
    return Graph(g.n, frozenset(p for p in g.pairs() if p not in g.edges))


# ---------------------------------------------------------------------------
# serialization


def _graph6_size(n: int) -> str:
    if n > GRAPH6_MAX_N:
        raise GraphValidationError(f"graph6 writer supports n <= {GRAPH6_MAX_N}, got {n}")
    return chr(n + 63)


def to_graph6(g: Graph) -> str:
    bits = [1 if (i, j) in g.edges else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chunks = (bits[k:k + 6] for k in range(0, len(bits), 6))
    body = "".join(chr(63 + int("".join(map(str, c)), 2)) for c in chunks)
    return _graph6_size(g.n) + body


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string", where="byte 0")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 character {ch!r}", where=f"byte {pos}")
    n = ord(s[0]) - 63
    if n > GRAPH6_MAX_N:
        raise ParseError("multi-byte graph6 sizes (n > 62) are not supported", where="byte 0")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise ParseError(
            f"expected {need} data bytes for n={n}, found {len(body)}", where=f"byte {1 + min(len(body), need)}"
        )
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> (5 - b)) & 1 for b in range(6))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    if any(bits[nbits:]):
        raise ParseError("nonzero padding bits", where=f"byte {len(s) - 1}")
    return Graph(n, frozenset(edges))


def to_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise ParseError("expected header 'n <count>'", where=f"line {lineno}")
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(f"bad vertex count {parts[1]!r}", where=f"line {lineno}") from None
            if n < 0:
                raise ParseError("negative vertex count", where=f"line {lineno}")
            continue
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", where=f"line {lineno}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer endpoint in {line!r}", where=f"line {lineno}") from None
        if u == v:
            raise GraphValidationError(f"line {lineno}: loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphValidationError(f"line {lineno}: endpoint out of range for n={n}")
        edges.append((u, v))
    if n is None:
        raise ParseError("missing header 'n <count>'", where="line 1")
    return Graph.from_edges(n, edges)


def parse_graph(text: str, format: str) -> Graph:
    if format == "graph6":
        return from_graph6(text)
    if format == "edge_list":
        return from_edge_list(text)
    raise ValueError(f"unknown graph format {format!r}")


def emit_graph(g: Graph, format: str) -> str:
    if format == "graph6":
        return to_graph6(g)
    if format == "edge_list":
        return to_edge_list(g)
    raise ValueError(f"unknown graph format {format!r}")


# ---------------------------------------------------------------------------
# structure


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comps.append(sorted(comp))
    return comps


def bfs_distances(g: Graph, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in sorted(g.adjacency[u]):
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def bfs_parents(g: Graph, source: int) -> dict[int, int | None]:
    parent = {source: None}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in sorted(g.adjacency[u]):
            if v not in parent:
                parent[v] = u
                queue.append(v)
    return parent


def eccentricities(g: Graph) -> list[int]:
    """Eccentricity of every vertex within its own component."""
    return [max(bfs_distances(g, v).values()) for v in range(g.n)]


def radius_and_centers(g: Graph) -> tuple[int, list[set]]:
    """Radius under the max-over-components convention, and centers per component.

    For a disconnected graph the radius is the largest component radius.
    ``centers[i]`` belongs to ``components(g)[i]``.
    """
    ecc = eccentricities(g)
    radius = 0
    centers = []
    for comp in components(g):
        r = min(ecc[v] for v in comp)
        radius = max(radius, r)
        centers.append({v for v in comp if ecc[v] == r})
    return radius, centers


class TreeClass(NamedTuple):
    tag: str
    spine: tuple | None = None


TREE_TAGS = ("path", "caterpillar", "lobster", "tree", "forest", "not_acyclic")


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(components(g))


def _path_order(g: Graph, vertices) -> list | None:
    """Vertices in path order if the induced subgraph on ``vertices`` is a path."""
    vs = set(vertices)
    if not vs:
        return []
    deg = {v: len(g.adjacency[v] & vs) for v in vs}
    if any(d > 2 for d in deg.values()):
        return None
    ends = sorted(v for v in vs if deg[v] <= 1)
    if len(vs) == 1:
        return list(vs)
    if len(ends) != 2:
        return None
    order = [ends[0]]
    prev = None
    while True:
        nxt = [v for v in g.adjacency[order[-1]] & vs if v != prev]
        if not nxt:
            break
        prev = order[-1]
        order.append(nxt[0])
    return order if len(order) == len(vs) else None


def _leaf_strip(g: Graph, vertices) -> list:
    vs = set(vertices)
    return sorted(v for v in vs if len(g.adjacency[v] & vs) >= 2)


def classify_tree(g: Graph) -> TreeClass:
    """Most specific of path, caterpillar, lobster, tree, forest, not_acyclic.

    An edgeless graph is a forest.
    """
    if not is_forest(g):
        return TreeClass("not_acyclic")
    if g.m == 0 or len(components(g)) > 1:
        return TreeClass("forest")
    everything = range(g.n)
    order = _path_order(g, everything)
    if order is not None:
        return TreeClass("path", tuple(order))
    core = _leaf_strip(g, everything)
    core_order = _path_order(g, core)
    if core_order is not None:
        return TreeClass("caterpillar", tuple(core_order))
    # lobster: deleting the leaves once leaves a caterpillar (or a path)
    spine = _path_order(g, _leaf_strip(g, core))
    if spine is not None:
        return TreeClass("lobster", tuple(spine))
    return TreeClass("tree")


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices, edge masks ascending.

    Bit ``i`` of the mask selects the ``i``-th pair of
    ``itertools.combinations(range(n), 2)``.
    """
    if not 1 <= n <= 6:
        raise ValueError(f"all_labeled_graphs supports 1 <= n <= 6, got {n}")
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))

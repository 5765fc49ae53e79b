"""Immutable simple undirected graphs and their metric invariants.

Vertices are dense integers 0..n-1; family coordinates (words, subsets,
tuples) live only in the optional labels. Adjacency is stored both as
sorted tuples for iteration and as one bitmask per vertex for constant
time membership tests.
"""

from __future__ import annotations

from collections import deque
from typing import Iterator, Sequence

from .errors import InvalidParam, InvalidVertex, NotConnected, SelfLoop


class _Unreachable:
    """Sentinel distance across components; arithmetic on it fails loudly."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "UNREACHABLE"


UNREACHABLE = _Unreachable()


class Graph:
    """Simple undirected graph, immutable after construction.

    Use :func:`build_graph` rather than constructing directly; the
    constructor trusts its arguments.
    """

    __slots__ = ("n", "m", "adj", "adj_bits", "labels")

    def __init__(self, n: int, adj: tuple[tuple[int, ...], ...],
                 labels: tuple[str, ...] | None = None):
        self.n = n
        self.adj = adj
        self.m = sum(len(row) for row in adj) // 2
        bits = []
        for row in adj:
            b = 0
            for v in row:
                b |= 1 << v
            bits.append(b)
        self.adj_bits = tuple(bits)
        self.labels = labels

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj_bits[u] >> v) & 1 == 1

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self.adj[u]

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges())

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Sequence[tuple[int, int]],
                labels: Sequence[str] | None = None) -> Graph:
    """Build a Graph from an edge list, deduplicating and symmetrizing.

    Rejects loops (SelfLoop) and out-of-range endpoints (InvalidVertex).
    """
    if n < 0:
        raise InvalidParam(f"vertex count must be >= 0, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n) or not (0 <= v < n):
            raise InvalidVertex(f"edge ({u},{v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    if labels is not None:
        labels = tuple(labels)
        if len(labels) != n:
            raise InvalidParam(f"expected {n} labels, got {len(labels)}")
        if len(set(labels)) != n:
            raise InvalidParam("labels must be pairwise distinct")
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs), labels)


class DistanceMatrix:
    """All-pairs shortest-path hop counts with an UNREACHABLE sentinel.

    Eccentricities are only defined when the graph is connected.
    """

    __slots__ = ("n", "rows", "ecc")

    def __init__(self, n: int, rows: list[list], ecc: tuple[int, ...] | None):
        self.n = n
        self.rows = rows
        self.ecc = ecc

    @property
    def connected(self) -> bool:
        return self.ecc is not None

    def dist(self, u: int, v: int):
        return self.rows[u][v]


def _bfs_row(adj: tuple[tuple[int, ...], ...], n: int, source: int) -> list[int]:
    dist = [-1] * n
    dist[source] = 0
    q = deque([source])
    while q:
        u = q.popleft()
        du = dist[u]
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = du + 1
                q.append(v)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex; UNREACHABLE marks cross-component pairs."""
    n = g.n
    rows = [_bfs_row(g.adj, n, s) for s in range(n)]
    connected = all(d >= 0 for row in rows for d in row)
    if connected:
        ecc = tuple(max(row) for row in rows) if n > 0 else ()
        return DistanceMatrix(n, rows, ecc)
    for row in rows:
        for v in range(n):
            if row[v] < 0:
                row[v] = UNREACHABLE
    return DistanceMatrix(n, rows, None)


def radius_diameter(dm: DistanceMatrix) -> tuple[int, int]:
    """Return (radius, diameter) of the connected graph behind dm."""
    if not dm.connected:
        raise NotConnected("radius and diameter require a connected graph")
    if dm.n == 0:
        raise InvalidParam("empty graph has no radius")
    return (min(dm.ecc), max(dm.ecc))


def girth(g: Graph) -> int:
    """Length of a shortest cycle, or 0 when the graph is acyclic.

    One BFS per start vertex; a non-tree edge (u, w) seen from start s
    witnesses a cycle of length at most dist(s, u) + dist(s, w) + 1, and
    the minimum over all starts and edges is exact.
    """
    n = g.n
    adj = g.adj
    best = 0
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            du = dist[u]
            if best and 2 * du >= best:
                break
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = du + 1
                    parent[w] = u
                    q.append(w)
                elif w != parent[u] and dist[w] >= du:
                    cand = du + dist[w] + 1
                    if best == 0 or cand < best:
                        best = cand
    return best


def is_connected(g: Graph) -> bool:
    """True iff a BFS from vertex 0 reaches every vertex (true for n = 0)."""
    if g.n == 0:
        return True
    row = _bfs_row(g.adj, g.n, 0)
    return all(d >= 0 for d in row)


def component_count(g: Graph) -> int:
    n = g.n
    seen = [False] * n
    count = 0
    for s in range(n):
        if seen[s]:
            continue
        count += 1
        seen[s] = True
        q = deque([s])
        while q:
            u = q.popleft()
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    q.append(v)
    return count


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the given vertex set.

    Returns the subgraph (vertices renumbered in sorted order) and the
    old-to-new index map. Labels carry over.
    """
    keep = sorted(set(vertices))
    for v in keep:
        if not (0 <= v < g.n):
            raise InvalidVertex(f"vertex {v} outside 0..{g.n - 1}")
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    labels = tuple(g.label(v) for v in keep) if g.labels is not None else None
    return build_graph(len(keep), edges, labels), index

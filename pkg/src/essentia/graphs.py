"""Exact-arithmetic graph primitives.

Everything downstream is built on four operations defined here: simple graphs
(directed or not), vertex-weighted shortest paths, minimum-weight directed
cycles through a vertex, and minimum vertex separators computed by
vertex-splitting max-flow.  Path and cycle weights are sums of *vertex*
weights, endpoints included, and all weights are exact `fractions.Fraction`
values so that downstream threshold comparisons are never approximate.
"""

from __future__ import annotations

import heapq
from collections import deque
from fractions import Fraction
from typing import Iterable, Optional

from .errors import InfeasibleSeparatorError, InputError, PreconditionError

# Per-vertex rational weights in [0, 1]; index u holds the weight of vertex u.
VertexWeights = tuple[Fraction, ...]

# A simple path, as the ordered tuple of its vertices.
Path = tuple[int, ...]

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


class Graph:
    """A finite simple graph with vertices 0..n-1.

    Undirected graphs store each edge in both adjacency lists.  Instances are
    immutable after construction and safe to share between threads.
    """

    __slots__ = ("n", "directed", "adj", "radj", "_adj_sets", "edges")

    def __init__(self, n: int, directed: bool, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        self.n = n
        self.directed = directed
        seen = set()
        adj = [[] for _ in range(n)]
        radj = [[] for _ in range(n)]
        canon = []
        for pos, (u, v) in enumerate(edges):
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edges[{pos}]: endpoint out of range (n={n}): ({u}, {v})")
            if u == v:
                raise InputError(f"edges[{pos}]: self-loop at vertex {u}")
            key = (u, v) if directed else (min(u, v), max(u, v))
            if key in seen:
                raise InputError(f"edges[{pos}]: duplicate edge ({u}, {v})")
            seen.add(key)
            canon.append(key)
            adj[u].append(v)
            radj[v].append(u)
            if not directed:
                adj[v].append(u)
                radj[u].append(v)
        self.adj = tuple(tuple(sorted(a)) for a in adj)
        self.radj = tuple(tuple(sorted(a)) for a in radj)
        self._adj_sets = tuple(frozenset(a) for a in self.adj)
        self.edges = tuple(sorted(canon))

    def has_arc(self, u: int, v: int) -> bool:
        """True if the arc (edge) u->v exists."""
        return v in self._adj_sets[u]

    def neighbors(self, u: int) -> frozenset[int]:
        return self._adj_sets[u]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.directed == other.directed
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.directed, self.edges))

    def __repr__(self) -> str:
        kind = "digraph" if self.directed else "graph"
        return f"Graph({kind}, n={self.n}, m={len(self.edges)})"


def check_weights(g: Graph, w: VertexWeights) -> None:
    """Validate a weight vector against a graph: length n, entries in [0, 1]."""
    if len(w) != g.n:
        raise InputError(f"weight vector has length {len(w)}, expected {g.n}")
    for u, x in enumerate(w):
        if not isinstance(x, Fraction):
            raise InputError(f"weight of vertex {u} is not an exact rational: {x!r}")
        if x < 0 or x > 1:
            raise InputError(f"weight of vertex {u} out of [0, 1]: {x}")


def reachable_set(g: Graph, starts: Iterable[int], removed: frozenset[int] = frozenset()) -> set[int]:
    """Vertices reachable from `starts` by arcs, never entering `removed`."""
    seen = {s for s in starts if s not in removed}
    queue = deque(sorted(seen))
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if v not in seen and v not in removed:
                seen.add(v)
                queue.append(v)
    return seen


def has_path(g: Graph, s: int, t: int, removed: frozenset[int] = frozenset()) -> bool:
    """True if a path from s to t survives the removal of `removed`."""
    if s in removed or t in removed:
        return False
    return t in reachable_set(g, (s,), removed)


def shortest_weighted_path(
    g: Graph,
    w: VertexWeights,
    sources: Iterable[int],
    targets: Iterable[int],
) -> Optional[tuple[Fraction, Path]]:
    """Minimum-weight simple path from any source to any target.

    The weight of a path is the sum of the weights of its vertices, endpoints
    included; a single vertex that is both source and target is a valid path
    of weight w(s).  Among equal-weight paths the lexicographically smallest
    vertex sequence is returned, which makes results deterministic.  Returns
    None when no target is reachable.
    """
    check_weights(g, w)
    sources = sorted(set(sources))
    target_set = set(targets)
    if not sources or not target_set:
        raise PreconditionError("sources and targets must be nonempty")
    for u in sources + sorted(target_set):
        if not 0 <= u < g.n:
            raise InputError(f"vertex {u} out of range (n={g.n})")

    # Label-setting search: a label is (weight, path); entering vertex u adds
    # w[u], and the source's own weight initialises its label.  The combined
    # (weight, path) key is monotone along arcs, so the first time a vertex is
    # popped its label is final, and ties resolve to the lex-least path.
    heap: list[tuple[Fraction, Path]] = [(w[s], (s,)) for s in sources]
    heapq.heapify(heap)
    best: dict[int, tuple[Fraction, Path]] = {s: (w[s], (s,)) for s in sources}
    settled: set[int] = set()
    while heap:
        dist, path = heapq.heappop(heap)
        u = path[-1]
        if u in settled:
            continue
        settled.add(u)
        if u in target_set:
            return dist, path
        for v in g.adj[u]:
            if v in settled:
                continue
            cand = (dist + w[v], path + (v,))
            if v not in best or cand < best[v]:
                best[v] = cand
                heapq.heappush(heap, cand)
    return None


def weighted_distances(
    g: Graph, w: VertexWeights, sources: Iterable[int]
) -> dict[int, Fraction]:
    """Minimum path weight from the source set to every reachable vertex.

    Same charging rule as `shortest_weighted_path` (endpoints included);
    unreachable vertices are absent from the result.
    """
    check_weights(g, w)
    heap = [(w[s], s) for s in sorted(set(sources))]
    heapq.heapify(heap)
    dist: dict[int, Fraction] = {}
    while heap:
        d, u = heapq.heappop(heap)
        if u in dist:
            continue
        dist[u] = d
        for v in g.adj[u]:
            if v not in dist:
                heapq.heappush(heap, (d + w[v], v))
    return dist


def reverse_graph(g: Graph) -> Graph:
    """The same graph with every arc flipped (identity for undirected graphs)."""
    if not g.directed:
        return g
    return Graph(g.n, True, [(v, u) for u, v in g.edges])


def min_weight_cycle_through(
    g: Graph, w: VertexWeights, v: int
) -> Optional[tuple[Fraction, Path]]:
    """Minimum-weight directed simple cycle containing v.

    Each vertex on the cycle is charged once.  The cycle is returned as the
    tuple of its vertices starting at v; the final vertex has an arc back to
    v.  Returns None when v lies on no cycle.
    """
    if not g.directed:
        raise PreconditionError("cycle search requires a directed graph")
    check_weights(g, w)
    if not 0 <= v < g.n:
        raise InputError(f"vertex {v} out of range (n={g.n})")
    starts = g.adj[v]
    if not starts:
        return None
    found = shortest_weighted_path(g, w, starts, (v,))
    if found is None:
        return None
    dist, path = found
    # path runs from an out-neighbor of v back to v; rotate so v leads.
    return dist, (v,) + path[:-1]


def _vertex_split_maxflow(
    g: Graph,
    sources: Iterable[int],
    targets: Iterable[int],
    forbidden: frozenset[int],
) -> tuple[int, frozenset[int]]:
    """Unit-capacity max-flow on the vertex-split graph.

    Every vertex u becomes u_in -> u_out with capacity 1; forbidden vertices
    get effectively infinite split capacity so they are never cut; arcs carry
    infinite capacity.  Returns (flow value, min cut as original vertices).
    """
    sources = sorted(set(sources))
    targets = sorted(set(targets))
    for u in sources + targets:
        if not 0 <= u < g.n:
            raise InputError(f"vertex {u} out of range (n={g.n})")
    big = g.n + 1  # any finite vertex cut has size <= n, so n+1 acts as infinity
    n2 = 2 * g.n
    source_node, sink_node = n2, n2 + 1
    cap: list[dict[int, int]] = [dict() for _ in range(n2 + 2)]

    def add(a: int, b: int, c: int) -> None:
        cap[a][b] = cap[a].get(b, 0) + c
        cap[b].setdefault(a, 0)

    for u in range(g.n):
        add(2 * u, 2 * u + 1, big if u in forbidden else 1)
    for u in range(g.n):
        for v in g.adj[u]:
            add(2 * u + 1, 2 * v, big)
    for u in sources:
        add(source_node, 2 * u, big)
    for u in targets:
        add(2 * u + 1, sink_node, big)

    flow = 0
    while True:
        # BFS for a shortest augmenting path.
        parent = {source_node: source_node}
        queue = deque([source_node])
        while queue and sink_node not in parent:
            a = queue.popleft()
            for b in sorted(cap[a]):
                if b not in parent and cap[a][b] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink_node not in parent:
            break
        bottleneck = None
        b = sink_node
        while b != source_node:
            a = parent[b]
            c = cap[a][b]
            bottleneck = c if bottleneck is None else min(bottleneck, c)
            b = a
        b = sink_node
        while b != source_node:
            a = parent[b]
            cap[a][b] -= bottleneck
            cap[b][a] += bottleneck
            b = a
        flow += bottleneck
        if flow > g.n:
            # only possible when some source-target path is fully forbidden
            raise InfeasibleSeparatorError(
                "every separator would need a forbidden vertex"
            )

    reach = {source_node}
    queue = deque([source_node])
    while queue:
        a = queue.popleft()
        for b in cap[a]:
            if b not in reach and cap[a][b] > 0:
                reach.add(b)
                queue.append(b)
    cut = frozenset(u for u in range(g.n) if 2 * u in reach and 2 * u + 1 not in reach)
    return flow, cut


def min_vertex_separator(
    g: Graph,
    sources: Iterable[int],
    targets: Iterable[int],
    forbidden: frozenset[int] = frozenset(),
) -> frozenset[int]:
    """Minimum-cardinality vertex set meeting every sources->targets path.

    The separator never contains a forbidden vertex and may contain source or
    target vertices themselves.  By max-flow/min-cut duality its size equals
    the maximum number of internally vertex-disjoint sources->targets paths.
    Raises InfeasibleSeparatorError when some path consists of forbidden
    vertices only, so that no valid separator exists.
    """
    flow, cut = _vertex_split_maxflow(g, sources, targets, frozenset(forbidden))
    assert len(cut) == flow, "min-cut size must equal the max-flow value"
    return cut


def count_vertex_disjoint_paths(
    g: Graph,
    sources: Iterable[int],
    targets: Iterable[int],
    forbidden: frozenset[int] = frozenset(),
) -> int:
    """Maximum number of vertex-disjoint sources->targets paths.

    Counted by augmenting paths on the same split graph used by
    `min_vertex_separator`; the two results must agree, which tests exploit.
    """
    flow, _ = _vertex_split_maxflow(g, sources, targets, frozenset(forbidden))
    return flow

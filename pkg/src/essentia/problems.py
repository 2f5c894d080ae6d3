"""Vertex hitting set problems and their separation oracles.

Each of the five supported problems asks for a minimum vertex set meeting
every member of a graph-implicit obstacle family:

===================  ==========  =======================================
problem              graph       obstacle family
===================  ==========  =======================================
vertex multicut      undirected  vertex sets of terminal-pair paths
directed multicut    directed    vertex sets of directed terminal paths
cograph deletion     undirected  vertex sets inducing a 4-vertex path
vertex cover         undirected  edges
feedback vertex set  directed    vertex sets of directed simple cycles
===================  ==========  =======================================

An instance never enumerates its obstacles up front; feasibility checks and
the weighted separation oracle inspect the graph directly.  The oracle is the
workhorse of the cutting-plane solver: given rational vertex weights it
either certifies that every obstacle weighs at least the threshold or
produces a minimum-weight violating obstacle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .errors import InputError, PreconditionError
from .graphs import (
    Graph,
    ONE,
    Path,
    VertexWeights,
    check_weights,
    min_weight_cycle_through,
    reachable_set,
    shortest_weighted_path,
)


class Problem(Enum):
    VERTEX_MULTICUT = "vertex-multicut"
    DIRECTED_VERTEX_MULTICUT = "directed-vertex-multicut"
    COGRAPH_DELETION = "cograph-deletion"
    VERTEX_COVER = "vertex-cover"
    DFVS = "dfvs"

    @property
    def directed(self) -> bool:
        return self in (Problem.DIRECTED_VERTEX_MULTICUT, Problem.DFVS)

    @property
    def uses_terminals(self) -> bool:
        return self in (Problem.VERTEX_MULTICUT, Problem.DIRECTED_VERTEX_MULTICUT)

    @classmethod
    def from_tag(cls, tag: str) -> "Problem":
        for p in cls:
            if p.value == tag:
                return p
        raise InputError(f"unknown problem tag {tag!r}")


class ObstacleKind(Enum):
    TERMINAL_PATH = "terminal-path"
    INDUCED_P4 = "induced-p4"
    EDGE = "edge"
    DIRECTED_CYCLE = "directed-cycle"


OBSTACLE_KIND_OF = {
    Problem.VERTEX_MULTICUT: ObstacleKind.TERMINAL_PATH,
    Problem.DIRECTED_VERTEX_MULTICUT: ObstacleKind.TERMINAL_PATH,
    Problem.COGRAPH_DELETION: ObstacleKind.INDUCED_P4,
    Problem.VERTEX_COVER: ObstacleKind.EDGE,
    Problem.DFVS: ObstacleKind.DIRECTED_CYCLE,
}


@dataclass(frozen=True)
class Obstacle:
    """A vertex set that every solution must intersect.

    `order` records the witnessing structure (path order, cycle order, the
    a-b-c-d order of an induced P4, or a sorted edge); `vertices` is what the
    hitting constraint ranges over.
    """

    kind: ObstacleKind
    vertices: frozenset[int]
    order: tuple[int, ...]

    def weight(self, w: VertexWeights) -> Fraction:
        return sum((w[u] for u in self.vertices), Fraction(0))


@dataclass(frozen=True)
class Instance:
    """A problem-tagged graph, plus terminal pairs for the multicut problems."""

    problem: Problem
    graph: Graph
    terminals: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        if self.graph.directed != self.problem.directed:
            kind = "directed" if self.problem.directed else "undirected"
            raise InputError(f"{self.problem.value} requires an {kind} graph")
        terms = tuple((int(s), int(t)) for s, t in self.terminals)
        object.__setattr__(self, "terminals", terms)
        if terms and not self.problem.uses_terminals:
            raise InputError(f"{self.problem.value} does not take terminal pairs")
        seen = set()
        for pos, (s, t) in enumerate(terms):
            if not (0 <= s < self.graph.n and 0 <= t < self.graph.n):
                raise InputError(f"terminals[{pos}]: vertex out of range: ({s}, {t})")
            if s == t:
                raise InputError(f"terminals[{pos}]: pair endpoints coincide: {s}")
            if (s, t) in seen:
                raise InputError(f"terminals[{pos}]: duplicate pair ({s}, {t})")
            seen.add((s, t))

    @property
    def n(self) -> int:
        return self.graph.n


# ---------------------------------------------------------------------------
# structure scans


def iter_induced_p4s(
    g: Graph, removed: frozenset[int] = frozenset()
) -> Iterator[tuple[int, int, int, int]]:
    """All induced 4-vertex paths avoiding `removed`, each exactly once.

    Every quadruple of vertices that could induce a P4 is examined, grouped
    by its (unique) middle edge b-c with b < c; a ranges over neighbors of b
    that avoid c, d over neighbors of c that avoid b, and the a-d non-edge is
    checked last.
    """
    for b, c in g.edges:
        if b in removed or c in removed:
            continue
        nb, nc = g.neighbors(b), g.neighbors(c)
        a_side = sorted(nb - nc - {c} - removed)
        if not a_side:
            continue
        d_side = sorted(nc - nb - {b} - removed)
        for a in a_side:
            na = g.neighbors(a)
            for d in d_side:
                if d != a and d not in na:
                    yield (a, b, c, d)


@lru_cache(maxsize=512)
def all_induced_p4s(g: Graph) -> tuple[tuple[int, int, int, int], ...]:
    """All induced 4-vertex paths of the graph, each once (cached per graph)."""
    return tuple(iter_induced_p4s(g))


def has_induced_p4(g: Graph, removed: frozenset[int] = frozenset()) -> bool:
    """True if the graph minus `removed` still contains an induced P4."""
    return next(iter_induced_p4s(g, removed), None) is not None


def is_acyclic(g: Graph, removed: frozenset[int] = frozenset()) -> bool:
    """True if the directed graph minus `removed` has no directed cycle."""
    WHITE, GRAY, BLACK = 0, 1, 2
    color = [BLACK if u in removed else WHITE for u in range(g.n)]
    for root in range(g.n):
        if color[root] != WHITE:
            continue
        stack = [(root, iter(g.adj[root]))]
        color[root] = GRAY
        while stack:
            u, it = stack[-1]
            advanced = False
            for v in it:
                if color[v] == GRAY:
                    return False
                if color[v] == WHITE:
                    color[v] = GRAY
                    stack.append((v, iter(g.adj[v])))
                    advanced = True
                    break
            if not advanced:
                color[u] = BLACK
                stack.pop()
    return True


def _canonical_cycle(cycle: tuple[int, ...]) -> tuple[int, ...]:
    """Rotate a directed cycle so its smallest vertex leads."""
    k = cycle.index(min(cycle))
    return cycle[k:] + cycle[:k]


# ---------------------------------------------------------------------------
# feasibility


def is_solution(inst: Instance, x: Iterable[int]) -> bool:
    """True iff deleting x destroys every obstacle of the instance."""
    removed = frozenset(x)
    for u in removed:
        if not 0 <= u < inst.n:
            raise InputError(f"vertex {u} out of range (n={inst.n})")
    g = inst.graph
    p = inst.problem
    if p in (Problem.VERTEX_MULTICUT, Problem.DIRECTED_VERTEX_MULTICUT):
        by_source: dict[int, set[int]] = {}
        for s, t in inst.terminals:
            if s not in removed and t not in removed:
                by_source.setdefault(s, set()).add(t)
        for s, targets in by_source.items():
            if targets & reachable_set(g, (s,), removed):
                return False
        return True
    if p is Problem.COGRAPH_DELETION:
        return not has_induced_p4(g, removed)
    if p is Problem.VERTEX_COVER:
        return all(u in removed or v in removed for u, v in g.edges)
    if p is Problem.DFVS:
        return is_acyclic(g, removed)
    raise AssertionError(p)


# ---------------------------------------------------------------------------
# weighted separation oracle


def find_violated_obstacle(
    inst: Instance,
    w: VertexWeights,
    v_pinned: Optional[int] = None,
    threshold: Fraction = ONE,
) -> Optional[Obstacle]:
    """Minimum-weight obstacle of weight < threshold, or None if none exists.

    A minimum-weight obstacle of every subfamily is examined: per terminal
    pair via vertex-weighted shortest path, per vertex via minimum-weight
    cycle search, every quadruple for induced P4s, every edge for vertex
    cover.  Hence a None answer certifies that all obstacles weigh at least
    the threshold.  Ties break toward the lexicographically least witness.
    """
    g = inst.graph
    check_weights(g, w)
    if v_pinned is not None and w[v_pinned] != 0:
        raise PreconditionError(f"pinned vertex {v_pinned} must have weight 0")
    p = inst.problem
    best: Optional[tuple[Fraction, tuple[int, ...]]] = None

    if p in (Problem.VERTEX_MULTICUT, Problem.DIRECTED_VERTEX_MULTICUT):
        by_source: dict[int, list[int]] = {}
        for s, t in inst.terminals:
            by_source.setdefault(s, []).append(t)
        for s in sorted(by_source):
            found = shortest_weighted_path(g, w, (s,), by_source[s])
            if found is not None and (best is None or found < best):
                best = found
        kind = ObstacleKind.TERMINAL_PATH
    elif p is Problem.COGRAPH_DELETION:
        for quad in all_induced_p4s(g):
            wt = w[quad[0]] + w[quad[1]] + w[quad[2]] + w[quad[3]]
            if best is None or (wt, quad) < best:
                best = (wt, quad)
        kind = ObstacleKind.INDUCED_P4
    elif p is Problem.VERTEX_COVER:
        for u, v in g.edges:
            wt = w[u] + w[v]
            if best is None or (wt, (u, v)) < best:
                best = (wt, (u, v))
        kind = ObstacleKind.EDGE
    elif p is Problem.DFVS:
        for v in range(g.n):
            found = min_weight_cycle_through(g, w, v)
            if found is None:
                continue
            cand = (found[0], _canonical_cycle(found[1]))
            if best is None or cand < best:
                best = cand
        kind = ObstacleKind.DIRECTED_CYCLE
    else:
        raise AssertionError(p)

    if best is None or best[0] >= threshold:
        return None
    return Obstacle(kind, frozenset(best[1]), best[1])


# ---------------------------------------------------------------------------
# exhaustive enumeration (test scale: exponential for paths and cycles)


def _all_simple_paths(g: Graph, s: int, t: int) -> Iterator[Path]:
    """DFS enumeration of all simple s->t paths."""
    path = [s]
    on_path = {s}

    def rec(u: int) -> Iterator[Path]:
        if u == t:
            yield tuple(path)
            return
        for v in g.adj[u]:
            if v not in on_path:
                path.append(v)
                on_path.add(v)
                yield from rec(v)
                path.pop()
                on_path.remove(v)

    yield from rec(s)


def _all_simple_cycles(g: Graph) -> Iterator[tuple[int, ...]]:
    """All directed simple cycles, each once, rotated to start at its minimum."""
    for root in range(g.n):
        path = [root]
        on_path = {root}

        def rec(u: int) -> Iterator[tuple[int, ...]]:
            for v in g.adj[u]:
                if v == root and len(path) >= 2:
                    yield tuple(path)
                elif v > root and v not in on_path:
                    path.append(v)
                    on_path.add(v)
                    yield from rec(v)
                    path.pop()
                    on_path.remove(v)

        yield from rec(root)


def all_obstacles(inst: Instance) -> list[Obstacle]:
    """Every obstacle of the instance, deduplicated by vertex set.

    Path and cycle families grow exponentially with the graph; intended for
    small instances (oracle audits, brute-force baselines).
    """
    g = inst.graph
    p = inst.problem
    found: dict[frozenset[int], tuple[int, ...]] = {}
    if p in (Problem.VERTEX_MULTICUT, Problem.DIRECTED_VERTEX_MULTICUT):
        kind = ObstacleKind.TERMINAL_PATH
        for s, t in inst.terminals:
            for path in _all_simple_paths(g, s, t):
                key = frozenset(path)
                rep = path if g.directed else min(path, path[::-1])
                if key not in found or rep < found[key]:
                    found[key] = rep
    elif p is Problem.COGRAPH_DELETION:
        kind = ObstacleKind.INDUCED_P4
        for quad in all_induced_p4s(g):
            found.setdefault(frozenset(quad), quad)
    elif p is Problem.VERTEX_COVER:
        kind = ObstacleKind.EDGE
        for e in g.edges:
            found[frozenset(e)] = e
    elif p is Problem.DFVS:
        kind = ObstacleKind.DIRECTED_CYCLE
        for cyc in _all_simple_cycles(g):
            key = frozenset(cyc)
            rep = _canonical_cycle(cyc)
            if key not in found or rep < found[key]:
                found[key] = rep
    else:
        raise AssertionError(p)
    return [
        Obstacle(kind, vs, order)
        for vs, order in sorted(found.items(), key=lambda kv: (len(kv[0]), kv[1]))
    ]


def enumerate_obstacles_minimal(inst: Instance) -> Iterator[Obstacle]:
    """Inclusion-minimal obstacles in nondecreasing cardinality, each once.

    An obstacle is dropped when a strictly smaller obstacle's vertex set is
    contained in it, so multicut yields its fewest-vertex surviving paths
    first and longer detours never appear.
    """
    kept: list[frozenset[int]] = []
    for ob in all_obstacles(inst):
        if any(small <= ob.vertices for small in kept):
            continue
        kept.append(ob.vertices)
        yield ob

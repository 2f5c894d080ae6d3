"""Exact optimum by obstacle-driven branch and bound.

The solver branches on a currently-violated obstacle with the fewest
deletable vertices, trying each in turn while excluding the previously tried
ones (include-vertex branches, partitioned by the first chosen vertex).
Obstacles whose deletable set is a single vertex force that vertex; an empty
deletable set refutes the branch.  Pruning combines a greedy incumbent found
up front, a lower bound from packing violated obstacles with pairwise
disjoint deletable sets, and (for the finitely enumerated obstacle families)
a domination rule: a vertex whose violated obstacles are all covered by some
other deletable vertex never needs to be branched on.

Deterministic throughout: among minimum solutions the lexicographically
least vertex set is returned, obtained by a prefix-growing second pass once
the optimum size is known.
"""

from __future__ import annotations

import heapq
import os
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import InputError, NodeCapError
from .graphs import Graph
from .problems import Instance, Problem, all_induced_p4s, is_solution

_INFEASIBLE = 10**9


def default_node_cap() -> int:
    """Search-node budget; the ESSENTIA_NODE_CAP env var overrides it."""
    raw = os.environ.get("ESSENTIA_NODE_CAP")
    return int(raw) if raw else 2_000_000


@dataclass(frozen=True)
class SolveBudget:
    """Caps for one exact solve: size budget, undeletable vertices, node cap."""

    max_k: Optional[int] = None
    forbidden: frozenset[int] = frozenset()
    node_cap: int = field(default_factory=default_node_cap)


def _min_allowed_path01(
    g: Graph,
    removed: frozenset[int],
    blocked: frozenset[int],
    sources: Iterable[int],
    targets: Iterable[int],
) -> Optional[tuple[int, tuple[int, ...]]]:
    """Surviving source->target path with the fewest non-blocked vertices.

    Vertices in `removed` are absent from the graph; `blocked` vertices cost
    0 (they cannot be deleted), all others cost 1.  Returns (cost, path) with
    lexicographic tie-breaking, or None when no path survives.
    """
    sources = [s for s in sorted(set(sources)) if s not in removed]
    target_set = {t for t in targets if t not in removed}
    if not sources or not target_set:
        return None
    heap = [(0 if s in blocked else 1, (s,)) for s in sources]
    heapq.heapify(heap)
    best: dict[int, tuple[int, tuple[int, ...]]] = {}
    for entry in heap:
        v = entry[1][-1]
        if v not in best or entry < best[v]:
            best[v] = entry
    settled: set[int] = set()
    while heap:
        cost, path = heapq.heappop(heap)
        u = path[-1]
        if u in settled:
            continue
        settled.add(u)
        if u in target_set:
            return cost, path
        for v in g.adj[u]:
            if v in settled or v in removed:
                continue
            cand = (cost + (0 if v in blocked else 1), path + (v,))
            if v not in best or cand < best[v]:
                best[v] = cand
                heapq.heappush(heap, cand)
    return None


class _Search:
    """One branch-and-bound run over a fixed instance and forbidden set."""

    def __init__(self, inst: Instance, forbidden: frozenset[int], node_cap: int):
        self.inst = inst
        self.g = inst.graph
        self.forbidden = forbidden
        self.node_cap = node_cap
        self.nodes = 0
        self.best: Optional[frozenset[int]] = None
        self.find_first = False
        p = inst.problem
        if p is Problem.COGRAPH_DELETION:
            self.obstacles = [(q, frozenset(q)) for q in all_induced_p4s(self.g)]
        elif p is Problem.VERTEX_COVER:
            self.obstacles = [(e, frozenset(e)) for e in self.g.edges]
        else:
            self.obstacles = None
        if p in (Problem.VERTEX_MULTICUT, Problem.DIRECTED_VERTEX_MULTICUT):
            self.by_source: dict[int, list[int]] = {}
            for s, t in inst.terminals:
                self.by_source.setdefault(s, []).append(t)

    # -- violated obstacle with fewest deletable vertices ---------------------

    def _violated(
        self, removed: frozenset[int], blocked: frozenset[int]
    ) -> Optional[tuple[list[int], frozenset[int]]]:
        """(deletable vertices, obstacle vertex set) minimizing the deletable
        count, or None when no obstacle survives.  The scan stops early once a
        count <= 1 shows up: a forced or refuting obstacle is as good a branch
        point as any.
        """
        p = self.inst.problem
        if self.obstacles is not None:
            best = None
            for order, vs in self.obstacles:
                if vs & removed:
                    continue
                allowed = [u for u in order if u not in blocked]
                key = (len(allowed), order)
                if best is None or key < best[0]:
                    best = (key, allowed, vs)
                    if key[0] <= 1:
                        break
            if best is None:
                return None
            return sorted(set(best[1])), best[2]
        best_path: Optional[tuple[int, tuple[int, ...]]] = None
        if p in (Problem.VERTEX_MULTICUT, Problem.DIRECTED_VERTEX_MULTICUT):
            for s in sorted(self.by_source):
                found = _min_allowed_path01(
                    self.g, removed, blocked, (s,), self.by_source[s]
                )
                if found is not None and (best_path is None or found < best_path):
                    best_path = found
                    if best_path[0] <= 1:
                        break
        elif p is Problem.DFVS:
            for v in range(self.g.n):
                if v in removed:
                    continue
                starts = [u for u in self.g.adj[v] if u not in removed]
                if not starts:
                    continue
                found = _min_allowed_path01(self.g, removed, blocked, starts, (v,))
                if found is not None and (best_path is None or found < best_path):
                    best_path = found
                    if best_path[0] <= 1:
                        break
        else:
            raise AssertionError(p)
        if best_path is None:
            return None
        vs = frozenset(best_path[1])
        return sorted(u for u in vs if u not in blocked), vs

    # -- packing lower bound ---------------------------------------------------

    def _packing_lb(
        self, removed: frozenset[int], blocked: frozenset[int], need: int
    ) -> int:
        """Greedy count of violated obstacles with pairwise disjoint deletable
        sets; each needs its own deletion.  Stops once `need` is reached; an
        undeletable violated obstacle yields an effectively infinite bound.
        """
        if self.obstacles is not None:
            used: set[int] = set()
            count = 0
            for _, vs in self.obstacles:
                if vs & removed:
                    continue
                allowed = vs - blocked
                if not allowed:
                    return _INFEASIBLE
                if allowed & used:
                    continue
                used |= allowed
                count += 1
                if count >= need:
                    return count
            return count
        # path/cycle families: pack whole vertex sets via repeated search
        if need > (self.g.n - len(removed)) // 2:
            return 0  # every obstacle has >= 2 vertices; `need` is out of reach
        gone = set(removed)
        count = 0
        while count < need:
            res = self._violated(frozenset(gone), blocked)
            if res is None:
                break
            allowed, vs = res
            if not allowed:
                return _INFEASIBLE
            gone |= vs
            count += 1
        return count

    # -- domination (finitely enumerated families only) -------------------------

    def _dominated(
        self, removed: frozenset[int], allowed: list[int]
    ) -> frozenset[int]:
        """Deletable vertices of the branch obstacle that some other deletable
        vertex covers: every violated obstacle containing u also contains w,
        so some minimum solution avoids u.  Equal coverage keeps the lower id.
        """
        if self.obstacles is None or len(allowed) <= 1:
            return frozenset()
        membership: dict[int, set[int]] = {u: set() for u in allowed}
        for idx, (_, vs) in enumerate(self.obstacles):
            if vs & removed:
                continue
            for u in allowed:
                if u in vs:
                    membership[u].add(idx)
        out: set[int] = set()
        for u in allowed:
            mu = membership[u]
            for w in allowed:
                if w == u or w in out:
                    continue
                mw = membership[w]
                if mu <= mw and (mu != mw or w < u):
                    out.add(u)
                    break
        return frozenset(out)

    # -- search ------------------------------------------------------------------

    def _bound(self, max_k: Optional[int]) -> int:
        b = self.g.n if max_k is None else max_k
        if self.best is not None:
            b = min(b, len(self.best) - 1)
        return b

    def _dfs(self, chosen: set[int], blocked: frozenset[int], max_k: Optional[int]) -> None:
        if self.find_first and self.best is not None:
            return
        self.nodes += 1
        if self.nodes > self.node_cap:
            raise NodeCapError(f"search exceeded {self.node_cap} nodes")
        while True:
            bound = self._bound(max_k)
            if len(chosen) > bound:
                return
            res = self._violated(frozenset(chosen), blocked)
            if res is None:
                if self.best is None or len(chosen) < len(self.best):
                    self.best = frozenset(chosen)
                return
            allowed, _ = res
            if not allowed:
                return
            if len(chosen) + 1 > bound:
                return
            if len(allowed) == 1:
                chosen = chosen | {allowed[0]}
                continue
            break
        need = bound - len(chosen) + 1
        if self._packing_lb(frozenset(chosen), blocked, need) >= need:
            return
        dominated = self._dominated(frozenset(chosen), allowed)
        if dominated:
            blocked = blocked | dominated
            allowed = [u for u in allowed if u not in dominated]
        tried: set[int] = set()
        for u in allowed:
            self._dfs(chosen | {u}, blocked | frozenset(tried), max_k)
            if self.find_first and self.best is not None:
                return
            tried.add(u)

    def _greedy(self) -> Optional[frozenset[int]]:
        chosen: set[int] = set()
        while True:
            res = self._violated(frozenset(chosen), self.forbidden)
            if res is None:
                break
            allowed, _ = res
            if not allowed:
                return None
            chosen |= set(allowed)
        for u in sorted(chosen, reverse=True):
            if is_solution(self.inst, chosen - {u}):
                chosen.discard(u)
        return frozenset(chosen)

    def minimum(self, max_k: Optional[int]) -> Optional[frozenset[int]]:
        """Any minimum-size solution of size <= max_k, or None."""
        incumbent = self._greedy()
        if incumbent is None:
            return None
        self.best = incumbent
        self.find_first = False
        self._dfs(set(), self.forbidden, max_k)
        if self.best is not None and (max_k is None or len(self.best) <= max_k):
            return self.best
        return None

    def completable(self, prefix: set[int], size_cap: int) -> bool:
        """Is there a solution of size <= size_cap containing `prefix`?"""
        self.best = None
        self.find_first = True
        self._dfs(set(prefix), self.forbidden, size_cap)
        return self.best is not None


def _check_budget(inst: Instance, budget: SolveBudget) -> None:
    for u in budget.forbidden:
        if not 0 <= u < inst.n:
            raise InputError(f"forbidden vertex {u} out of range (n={inst.n})")
    if budget.max_k is not None and not 0 <= budget.max_k <= inst.n:
        raise InputError(f"max_k {budget.max_k} out of range (n={inst.n})")


def solve_exact(
    inst: Instance, budget: SolveBudget = SolveBudget()
) -> Optional[frozenset[int]]:
    """Minimum-size solution avoiding the forbidden vertices, within max_k.

    Returns None when no such solution exists (never an error); among
    minimum solutions the lexicographically least vertex set is returned.
    Raises NodeCapError when the search budget runs out.
    """
    _check_budget(inst, budget)
    search = _Search(inst, budget.forbidden, budget.node_cap)
    base = search.minimum(budget.max_k)
    if base is None:
        return None
    size = len(base)
    prefix: set[int] = set()
    for v in range(inst.n):
        if len(prefix) == size:
            break
        if v in budget.forbidden or v in prefix:
            continue
        if v in base:
            # base witnesses that prefix + {v} completes to a minimum solution
            prefix.add(v)
            continue
        if search.completable(prefix | {v}, size):
            prefix.add(v)
            base = search.best
    assert len(prefix) == size, "prefix construction must reach the optimum size"
    return frozenset(prefix)


def opt_value(inst: Instance, node_cap: Optional[int] = None) -> int:
    """Size of an optimal solution (no forbidden vertices, no size budget)."""
    cap = node_cap if node_cap is not None else default_node_cap()
    search = _Search(inst, frozenset(), cap)
    best = search.minimum(None)
    assert best is not None, "deleting all vertices always hits every obstacle"
    return len(best)


def opt_value_avoiding(
    inst: Instance, forbidden: frozenset[int], node_cap: Optional[int] = None
) -> Optional[int]:
    """Minimum solution size among solutions disjoint from `forbidden`."""
    cap = node_cap if node_cap is not None else default_node_cap()
    search = _Search(inst, frozenset(forbidden), cap)
    best = search.minimum(None)
    return None if best is None else len(best)

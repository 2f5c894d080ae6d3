"""Independent brute-force baselines used to validate the library.

Everything here recomputes answers from first principles (subset and path
enumeration, networkx traversals, float LP via scipy) without touching the
library's solvers, so agreement is meaningful.
"""

from fractions import Fraction
from itertools import combinations

import networkx as nx

from essentia.graphs import Graph
from essentia.problems import Instance, Problem


def to_nx(g: Graph, removed=frozenset()):
    gx = nx.DiGraph() if g.directed else nx.Graph()
    gx.add_nodes_from(u for u in range(g.n) if u not in removed)
    gx.add_edges_from(
        (u, v) for u, v in g.edges if u not in removed and v not in removed
    )
    return gx


def induces_p4(g: Graph, quad) -> bool:
    """Degree-sequence test: exactly 3 edges, degrees (1,1,2,2), connected."""
    sub = [(u, v) for u, v in combinations(sorted(quad), 2) if g.has_arc(u, v)]
    if len(sub) != 3:
        return False
    deg = {u: 0 for u in quad}
    for u, v in sub:
        deg[u] += 1
        deg[v] += 1
    if sorted(deg.values()) != [1, 1, 2, 2]:
        return False
    gx = nx.Graph(sub)
    gx.add_nodes_from(quad)
    return nx.is_connected(gx)


def naive_has_p4(g: Graph, removed=frozenset()) -> bool:
    alive = [u for u in range(g.n) if u not in removed]
    return any(induces_p4(g, quad) for quad in combinations(alive, 4))


def naive_is_solution(inst: Instance, x) -> bool:
    removed = frozenset(x)
    g = inst.graph
    if inst.problem in (Problem.VERTEX_MULTICUT, Problem.DIRECTED_VERTEX_MULTICUT):
        gx = to_nx(g, removed)
        for s, t in inst.terminals:
            if s in removed or t in removed:
                continue
            if nx.has_path(gx, s, t):
                return False
        return True
    if inst.problem is Problem.COGRAPH_DELETION:
        return not naive_has_p4(g, removed)
    if inst.problem is Problem.VERTEX_COVER:
        return all(u in removed or v in removed for u, v in g.edges)
    if inst.problem is Problem.DFVS:
        return nx.is_directed_acyclic_graph(to_nx(g, removed))
    raise AssertionError(inst.problem)


def naive_opt(inst: Instance, forbidden=frozenset()):
    """Minimum solution size by subset enumeration; None if none exists."""
    usable = [u for u in range(inst.n) if u not in forbidden]
    for k in range(len(usable) + 1):
        for sub in combinations(usable, k):
            if naive_is_solution(inst, frozenset(sub)):
                return k
    return None


def naive_min_solution(inst: Instance, forbidden=frozenset()):
    """Lexicographically least minimum solution by ordered enumeration."""
    usable = [u for u in range(inst.n) if u not in forbidden]
    for k in range(len(usable) + 1):
        for sub in combinations(usable, k):  # lexicographic within each size
            if naive_is_solution(inst, frozenset(sub)):
                return frozenset(sub)
    return None


def all_simple_paths(g: Graph, s: int, t: int):
    if s == t:
        yield (s,)
        return
    gx = to_nx(g)
    for path in nx.all_simple_paths(gx, s, t):
        yield tuple(path)


def naive_shortest_weighted_path(g: Graph, w, sources, targets):
    """Minimum vertex-weight path by exhaustive simple-path enumeration."""
    best = None
    for s in sorted(set(sources)):
        for t in sorted(set(targets)):
            for path in all_simple_paths(g, s, t):
                cand = (sum((w[u] for u in path), Fraction(0)), path)
                if best is None or cand < best:
                    best = cand
    return best


def naive_min_cycle_through(g: Graph, w, v):
    best = None
    for cycle in nx.simple_cycles(to_nx(g)):
        if v not in cycle:
            continue
        weight = sum((w[u] for u in cycle), Fraction(0))
        k = cycle.index(v)
        rotated = tuple(cycle[k:] + cycle[:k])
        cand = (weight, rotated)
        if best is None or cand < best:
            best = cand
    return best


def naive_min_separator_size(g: Graph, sources, targets, forbidden=frozenset()):
    """Smallest vertex set meeting every sources->targets path; None if stuck."""
    sources, targets = set(sources), set(targets)

    def separates(x):
        if sources & targets - x:
            return False  # a shared vertex outside x is an uncut trivial path
        gx = to_nx(g, frozenset(x))
        for s in sources - x:
            for t in targets - x:
                if nx.has_path(gx, s, t):
                    return False
        return True

    usable = [u for u in range(g.n) if u not in forbidden]
    for k in range(len(usable) + 1):
        for sub in combinations(usable, k):
            if separates(set(sub)):
                return k
    return None


def naive_all_obstacle_sets(inst: Instance):
    """Every obstacle vertex set of the instance (exponential; keep n small)."""
    g = inst.graph
    out = set()
    if inst.problem in (Problem.VERTEX_MULTICUT, Problem.DIRECTED_VERTEX_MULTICUT):
        for s, t in inst.terminals:
            for path in all_simple_paths(g, s, t):
                out.add(frozenset(path))
    elif inst.problem is Problem.COGRAPH_DELETION:
        for quad in combinations(range(g.n), 4):
            if induces_p4(g, quad):
                out.add(frozenset(quad))
    elif inst.problem is Problem.VERTEX_COVER:
        out = {frozenset(e) for e in g.edges}
    elif inst.problem is Problem.DFVS:
        out = {frozenset(c) for c in nx.simple_cycles(to_nx(g))}
    else:
        raise AssertionError(inst.problem)
    return out


def naive_minimal_obstacle_sets(inst: Instance):
    sets = naive_all_obstacle_sets(inst)
    return {s for s in sets if not any(o < s for o in sets)}


def float_lp_value(obstacle_sets, n, pinned=None):
    """Full-enumeration covering LP solved in floating point (scipy)."""
    from scipy.optimize import linprog

    if not obstacle_sets:
        return 0.0
    rows = sorted(obstacle_sets, key=sorted)
    a_ub = [[-1.0 if u in s else 0.0 for u in range(n)] for s in rows]
    b_ub = [-1.0] * len(rows)
    bounds = [(0.0, 0.0) if u == pinned else (0.0, 1.0) for u in range(n)]
    res = linprog([1.0] * n, A_ub=a_ub, b_ub=b_ub, bounds=bounds, method="highs")
    assert res.status == 0, f"float LP failed: {res.message}"
    return res.fun

"""Constructive rounding of vertex-avoiding LP optima with certified factors.

All three rounders operate in the regime where a single vertex v alone hits
every obstacle and the fractional solution avoids v.  They turn the
fractional solution into an integral one of certified size:

* multicut (factor 2): collect the vertices whose every path to v carries
  fractional weight at least 1/2, then cut them away from v with a minimum
  vertex separator.  Doubling the fractional values yields a fractional
  separator of weight 2z, and vertex-disjoint-path duality bounds the
  integral separator by the same amount.
* directed multicut (factor 4): the same idea applied twice, once against
  the vertices that reach v heavily (a source-side separator) and once
  against the vertices v reaches heavily (a sink-side separator).
* cograph deletion (factor 5/2): iteratively harvest all vertices of
  residual weight at least 2/5; when none remain, every vertex that still
  lies on an induced P4 weighs at least 1/5, and the lighter half of the
  split of those vertices by adjacency to v completes the solution.

Every certificate records the witness sets and is validated on construction;
preconditions are checked loudly rather than producing unsound certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError
from .graphs import (
    Graph,
    HALF,
    min_vertex_separator,
    reverse_graph,
    weighted_distances,
)
from .lp import FractionalSolution, LpProblem, verify_feasible
from .problems import Instance, Problem, has_induced_p4, is_solution, iter_induced_p4s

POINT_FOUR = Fraction(2, 5)
POINT_TWO = Fraction(1, 5)


@dataclass(frozen=True)
class RoundingCertificate:
    """An integral solution with the sets witnessing its size bound."""

    factor_bound: Fraction
    fractional_value: Fraction
    integral_set: frozenset[int]
    witness_sets: dict[str, tuple]
    pinned_vertex: int

    def __post_init__(self):
        assert self.pinned_vertex not in self.integral_set, "rounded set must avoid the pinned vertex"
        assert (
            len(self.integral_set) <= self.factor_bound * self.fractional_value
        ), f"factor bound violated: {len(self.integral_set)} > {self.factor_bound} * {self.fractional_value}"


def _check_inputs(inst: Instance, v: int, x: FractionalSolution) -> None:
    if not 0 <= v < inst.n:
        raise PreconditionError(f"vertex {v} out of range (n={inst.n})")
    if not is_solution(inst, {v}):
        raise PreconditionError(f"{{{v}}} does not hit every obstacle; nothing to certify")
    if not verify_feasible(LpProblem(inst, pinned_vertex=v), x):
        raise PreconditionError(f"fractional solution is not feasible with vertex {v} pinned to 0")


def _heavy_set(g: Graph, x: FractionalSolution, v: int) -> frozenset[int]:
    """Vertices whose every path to the source set {v} weighs at least 1/2.

    Computed from single-source distances out of v; vertices unreachable
    from v qualify vacuously.
    """
    dist = weighted_distances(g, x.weights, (v,))
    return frozenset(u for u in range(g.n) if dist.get(u, None) is None or dist[u] >= HALF)


def round_multicut(inst: Instance, v: int, x: FractionalSolution) -> RoundingCertificate:
    """Factor-2 rounding for undirected multicut when {v} is a solution.

    D holds the vertices all of whose paths to v weigh at least 1/2; for
    every terminal pair at least one endpoint lands in D, so any (v, D)
    separator avoiding v is a multicut.  The separator is computed on the
    bidirected graph extended by a sink fed from D.
    """
    if inst.problem is not Problem.VERTEX_MULTICUT:
        raise PreconditionError(f"expected a vertex multicut instance, got {inst.problem.value}")
    _check_inputs(inst, v, x)
    g = inst.graph
    d_set = _heavy_set(g, x, v)
    sink = g.n
    arcs = [(a, b) for a, b in g.edges] + [(b, a) for a, b in g.edges]
    arcs += [(u, sink) for u in sorted(d_set)]
    aux = Graph(g.n + 1, True, arcs)
    cut = min_vertex_separator(aux, (v,), (sink,), frozenset({v, sink}))
    return RoundingCertificate(
        factor_bound=Fraction(2),
        fractional_value=x.value,
        integral_set=frozenset(cut),
        witness_sets={"D": tuple(sorted(d_set))},
        pinned_vertex=v,
    )


def round_directed_multicut(inst: Instance, v: int, x: FractionalSolution) -> RoundingCertificate:
    """Factor-4 rounding for directed multicut when {v} is a solution.

    S holds the vertices whose every path *to* v weighs at least 1/2, T the
    same for paths *from* v; every terminal pair has its source in S or its
    target in T.  A minimum (S, v) separator plus a minimum (v, T) separator
    therefore cuts every terminal path, and each half is at most 2z.
    """
    if inst.problem is not Problem.DIRECTED_VERTEX_MULTICUT:
        raise PreconditionError(f"expected a directed multicut instance, got {inst.problem.value}")
    _check_inputs(inst, v, x)
    g = inst.graph
    s_set = _heavy_set(reverse_graph(g), x, v)
    t_set = _heavy_set(g, x, v)
    extra = g.n
    src_aux = Graph(g.n + 1, True, list(g.edges) + [(extra, u) for u in sorted(s_set)])
    cut_s = min_vertex_separator(src_aux, (extra,), (v,), frozenset({extra, v}))
    sink_aux = Graph(g.n + 1, True, list(g.edges) + [(u, extra) for u in sorted(t_set)])
    cut_t = min_vertex_separator(sink_aux, (v,), (extra,), frozenset({v, extra}))
    return RoundingCertificate(
        factor_bound=Fraction(4),
        fractional_value=x.value,
        integral_set=frozenset(cut_s | cut_t),
        witness_sets={
            "S": tuple(sorted(s_set)),
            "T": tuple(sorted(t_set)),
            "X_S": tuple(sorted(cut_s)),
            "X_T": tuple(sorted(cut_t)),
        },
        pinned_vertex=v,
    )


def round_cograph(g: Graph, v: int, x: FractionalSolution) -> RoundingCertificate:
    """Factor-5/2 rounding for P4 hitting when the graph minus v is P4-free.

    Repeatedly moves every residual vertex of weight >= 2/5 into the
    solution and deletes it; the restricted fractional solution stays
    feasible, so no re-solve is needed and the 2/5 threshold pays for each
    harvested vertex.  Once no heavy vertex remains, each vertex still on an
    induced P4 weighs >= 1/5, and because every residual P4 passes through v
    it contains both a neighbor and a non-neighbor of v; the smaller side of
    that split (ties to the non-neighbors) finishes the job at cost at most
    half the residual support, i.e. 5/2 of the residual value.
    """
    inst = Instance(Problem.COGRAPH_DELETION, g)
    if has_induced_p4(g, frozenset({v})):
        raise PreconditionError(f"graph minus vertex {v} still has an induced P4")
    _check_inputs(inst, v, x)

    removed: set[int] = set()
    rounds: list[tuple[int, ...]] = []
    while True:
        heavy = tuple(
            u for u in range(g.n) if u not in removed and x.weights[u] >= POINT_FOUR
        )
        if not heavy:
            break
        rounds.append(heavy)
        removed.update(heavy)

    v_star: set[int] = set()
    for quad in iter_induced_p4s(g, frozenset(removed)):
        v_star.update(quad)
    v_star.discard(v)
    for u in v_star:
        assert x.weights[u] >= POINT_TWO, "light vertex on a residual P4 contradicts feasibility"
    neigh = frozenset(sorted(v_star & g.neighbors(v)))
    non_neigh = frozenset(sorted(v_star - g.neighbors(v)))
    picked = neigh if len(neigh) < len(non_neigh) else non_neigh

    integral = frozenset(removed | picked)
    return RoundingCertificate(
        factor_bound=Fraction(5, 2),
        fractional_value=x.value,
        integral_set=integral,
        witness_sets={
            "heavy_rounds": tuple(rounds),
            "V_star": tuple(sorted(v_star)),
            "split_neighbors": tuple(sorted(neigh)),
            "split_non_neighbors": tuple(sorted(non_neigh)),
            "picked": tuple(sorted(picked)),
        },
        pinned_vertex=v,
    )

from fractions import Fraction as F

import pytest

from essentia.errors import PreconditionError
from essentia.exact import SolveBudget, opt_value_avoiding, solve_exact
from essentia.graphs import Graph
from essentia.lab import gen_matching_apex, gen_star_multicut
from essentia.lp import FractionalSolution, LpProblem, solve
from essentia.problems import Instance, Problem, is_solution
from essentia.rounding import round_cograph, round_directed_multicut, round_multicut

from conftest import random_singleton_instance
from oracles import naive_min_separator_size


def pinned_optimum(inst, v):
    return solve(LpProblem(inst, pinned_vertex=v))


class TestRoundMulticut:
    def test_star_certificate_is_tight(self):
        inst = gen_star_multicut(6).instance
        x = pinned_optimum(inst, 0)
        cert = round_multicut(inst, 0, x)
        assert set(cert.witness_sets["D"]) == set(range(1, 7))
        assert len(cert.integral_set) == 6 == 2 * x.value
        assert is_solution(inst, cert.integral_set)
        # no smaller center-to-D separator exists
        assert naive_min_separator_size(inst.graph, {0}, set(range(1, 7)), frozenset({0})) == 6

    def test_integral_input_stays_integral(self):
        # chain a-u-v-b with the only a..b route through u and v
        g = Graph(4, False, [(0, 1), (1, 2), (2, 3)])
        inst = Instance(Problem.VERTEX_MULTICUT, g, ((0, 3),))
        x = FractionalSolution((F(0), F(1), F(0), F(0)), F(1))
        cert = round_multicut(inst, 2, x)
        assert cert.integral_set == frozenset({1})

    @pytest.mark.parametrize("seed", range(40))
    def test_random_singleton_instances(self, seed):
        inst, v = random_singleton_instance(Problem.VERTEX_MULTICUT, 8, seed)
        x = pinned_optimum(inst, v)
        cert = round_multicut(inst, v, x)
        assert v not in cert.integral_set
        assert len(cert.integral_set) <= 2 * x.value
        assert is_solution(inst, cert.integral_set)
        # every terminal pair leaves an endpoint in D
        d = set(cert.witness_sets["D"])
        for s, t in inst.terminals:
            assert s in d or t in d

    def test_rejects_non_singleton_vertex(self):
        inst = gen_star_multicut(4).instance
        x = pinned_optimum(inst, 0)
        with pytest.raises(PreconditionError):
            round_multicut(inst, 1, FractionalSolution((F(0),) * 5, F(0)))
        with pytest.raises(PreconditionError):  # infeasible x
            round_multicut(inst, 0, FractionalSolution((F(0),) * 5, F(0)))
        assert round_multicut(inst, 0, x)  # the honest call is fine

    def test_rejects_wrong_problem(self):
        inst = gen_matching_apex(3).instance
        with pytest.raises(PreconditionError):
            round_multicut(inst, 0, FractionalSolution((F(0),) * 7, F(0)))


class TestRoundDirectedMulticut:
    def directed_star(self, p, q):
        arcs = [(i, 0) for i in range(1, p + 1)]
        arcs += [(0, p + j) for j in range(1, q + 1)]
        pairs = tuple((i, p + j) for i in range(1, p + 1) for j in range(1, q + 1))
        return Instance(Problem.DIRECTED_VERTEX_MULTICUT, Graph(p + q + 1, True, arcs), pairs)

    def test_directed_star_within_factor(self):
        inst = self.directed_star(3, 3)
        x = pinned_optimum(inst, 0)
        cert = round_directed_multicut(inst, 0, x)
        assert len(cert.integral_set) <= 4 * x.value
        assert is_solution(inst, cert.integral_set)

    def test_integral_input_cuts_exactly(self):
        # a -> u -> v -> w -> b, pair (a, b)
        g = Graph(5, True, [(0, 1), (1, 2), (2, 3), (3, 4)])
        inst = Instance(Problem.DIRECTED_VERTEX_MULTICUT, g, ((0, 4),))
        x = FractionalSolution((F(0), F(1), F(0), F(1), F(0)), F(2))
        cert = round_directed_multicut(inst, 2, x)
        assert is_solution(inst, cert.integral_set)
        assert len(cert.integral_set) <= 8

    @pytest.mark.parametrize("seed", range(40))
    def test_random_singleton_instances(self, seed):
        inst, v = random_singleton_instance(Problem.DIRECTED_VERTEX_MULTICUT, 7, seed)
        x = pinned_optimum(inst, v)
        cert = round_directed_multicut(inst, v, x)
        assert v not in cert.integral_set
        assert len(cert.integral_set) <= 4 * x.value
        assert is_solution(inst, cert.integral_set)
        s_set, t_set = set(cert.witness_sets["S"]), set(cert.witness_sets["T"])
        for s, t in inst.terminals:
            assert s in s_set or t in t_set


class TestRoundCograph:
    def test_matching_apex_four_edges(self):
        labeled = gen_matching_apex(4)
        inst = labeled.instance
        x = pinned_optimum(inst, 0)
        cert = round_cograph(inst.graph, 0, x)
        assert x.value == F(2)
        assert len(cert.integral_set) <= F(5, 2) * x.value
        assert is_solution(inst, cert.integral_set)
        # integral optimum avoiding the apex is m - 1 = 3
        assert opt_value_avoiding(inst, frozenset({0})) == 3

    def test_integral_solution_passes_through(self):
        inst = gen_matching_apex(3).instance
        sol = solve_exact(inst, SolveBudget(forbidden=frozenset({0})))
        weights = tuple(F(1) if u in sol else F(0) for u in range(inst.n))
        x = FractionalSolution(weights, F(len(sol)))
        cert = round_cograph(inst.graph, 0, x)
        assert cert.integral_set == sol
        assert cert.witness_sets["picked"] == ()

    def test_cograph_input_yields_empty_set(self):
        g = Graph(4, False, [(0, 1), (2, 3)])
        cert = round_cograph(g, 0, FractionalSolution((F(0),) * 4, F(0)))
        assert cert.integral_set == frozenset()

    def test_light_feasible_solution_exercises_the_split(self):
        # all weights 1/3 < 2/5: the split of the P4-covered vertices decides
        labeled = gen_matching_apex(5)
        g = labeled.instance.graph
        w = [F(0)] * g.n
        for u in range(1, g.n):
            w[u] = F(1, 3)
        x = FractionalSolution(tuple(w), F(10, 3))
        cert = round_cograph(g, 0, x)
        assert cert.witness_sets["heavy_rounds"] == ()
        assert set(cert.witness_sets["V_star"]) == set(range(1, 11))
        # ties break toward the non-neighbors of the pinned vertex
        assert cert.integral_set == frozenset(labeled.labels["far"])
        assert len(cert.integral_set) <= F(5, 2) * x.value
        assert is_solution(labeled.instance, cert.integral_set)

    @pytest.mark.parametrize("seed", range(40))
    def test_random_singleton_instances(self, seed):
        inst, v = random_singleton_instance(Problem.COGRAPH_DELETION, 8, seed)
        x = pinned_optimum(inst, v)
        cert = round_cograph(inst.graph, v, x)
        assert v not in cert.integral_set
        assert len(cert.integral_set) <= F(5, 2) * x.value
        assert is_solution(inst, cert.integral_set)

    def test_rejects_residual_p4(self):
        g = Graph(5, False, [(0, 1), (1, 2), (2, 3), (3, 4)])  # P5: no singleton fix
        with pytest.raises(PreconditionError):
            round_cograph(g, 0, FractionalSolution((F(0),) * 5, F(0)))

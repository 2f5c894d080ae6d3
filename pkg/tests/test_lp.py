import random
from fractions import Fraction as F

import pytest

from essentia.errors import InputError, IterationCapError, PinInfeasibleError
from essentia.exact import opt_value
from essentia.graphs import Graph
from essentia.lab import gen_matching_apex, gen_star_multicut
from essentia.lp import (
    FractionalSolution,
    LpProblem,
    solve,
    solve_restricted,
    verify_feasible,
)
from essentia.problems import Instance, Obstacle, ObstacleKind, Problem

from conftest import random_instance
from oracles import float_lp_value, naive_all_obstacle_sets


def edge_obstacle(u, v):
    return Obstacle(ObstacleKind.EDGE, frozenset({u, v}), (u, v))


class TestSolveRestricted:
    def test_single_pair_needs_unit_mass(self):
        assert solve_restricted([edge_obstacle(0, 1)], 2).value == 1

    def test_pin_forces_the_other_endpoint(self):
        sol = solve_restricted([edge_obstacle(0, 1)], 2, pinned=0)
        assert sol.weights == (F(0), F(1)) and sol.value == 1

    def test_triangle_is_half_integral(self):
        pool = [edge_obstacle(0, 1), edge_obstacle(1, 2), edge_obstacle(0, 2)]
        sol = solve_restricted(pool, 3)
        assert sol.value == F(3, 2)

    def test_empty_pool_is_all_zero(self):
        sol = solve_restricted([], 4)
        assert sol.value == 0 and sol.weights == (F(0),) * 4

    def test_pin_only_constraint_is_infeasible(self):
        with pytest.raises(PinInfeasibleError):
            solve_restricted([[1]], 3, pinned=1)

    @pytest.mark.parametrize("seed", range(12))
    def test_matches_float_lp_on_random_pools(self, seed):
        rng = random.Random(seed)
        n = rng.randint(3, 7)
        pool = []
        for _ in range(rng.randint(1, 8)):
            size = rng.randint(2, min(4, n))
            pool.append(frozenset(rng.sample(range(n), size)))
        pinned = rng.choice([None] + list(range(n)))
        if pinned is not None and any(s <= {pinned} for s in pool):
            return
        sol = solve_restricted(sorted(pool, key=sorted), n, pinned=pinned)
        want = float_lp_value(pool, n, pinned)
        assert abs(float(sol.value) - want) < 1e-7
        # dual-derived solution must cover the pool
        for s in pool:
            assert sum((sol.weights[u] for u in s), F(0)) >= 1


class TestSolve:
    @pytest.mark.parametrize("m", [2, 4, 6, 9])
    def test_star_pinned_center_value(self, m):
        inst = gen_star_multicut(m).instance
        sol = solve(LpProblem(inst, pinned_vertex=0))
        assert sol.value == F(m, 2)
        assert sol.weights[0] == 0

    @pytest.mark.parametrize("m", [2, 4, 8])
    def test_matching_apex_pinned_value(self, m):
        inst = gen_matching_apex(m).instance
        sol = solve(LpProblem(inst, pinned_vertex=0))
        assert sol.value == F(m, 2)

    def test_no_obstacles_all_zero(self):
        inst = Instance(Problem.VERTEX_COVER, Graph(5, False, []))
        sol = solve(LpProblem(inst))
        assert sol.value == 0 and set(sol.weights) == {F(0)}

    @pytest.mark.parametrize("problem", list(Problem))
    @pytest.mark.parametrize("seed", range(4))
    def test_final_solution_certified_by_full_enumeration(self, problem, seed):
        inst = random_instance(problem, 6, 70 + seed)
        lp = LpProblem(inst)
        sol = solve(lp)
        full_pool = sorted(naive_all_obstacle_sets(inst), key=sorted)
        reference = solve_restricted(full_pool, inst.n) if full_pool else None
        if reference is not None:
            assert sol.value == reference.value
            assert abs(float(sol.value) - float_lp_value(set(full_pool), inst.n)) < 1e-7
        else:
            assert sol.value == 0
        assert verify_feasible(lp, sol)

    @pytest.mark.parametrize("seed", range(6))
    def test_weak_duality_against_integral_optimum(self, seed):
        rng = random.Random(seed)
        problem = rng.choice(list(Problem))
        inst = random_instance(problem, 8, 99 + seed)
        assert solve(LpProblem(inst)).value <= opt_value(inst)

    def test_pool_value_monotone_under_growth(self):
        inst = random_instance(Problem.VERTEX_COVER, 7, 123)
        lp = LpProblem(inst)
        solve(lp)
        values = [
            solve_restricted(lp.constraint_pool[:i], inst.n).value
            for i in range(len(lp.constraint_pool) + 1)
        ]
        assert values == sorted(values)

    def test_iteration_cap_raises(self):
        inst = gen_star_multicut(5).instance
        with pytest.raises(IterationCapError):
            solve(LpProblem(inst), max_cuts=0)

    def test_cograph_all_quarters_always_feasible(self):
        for seed in range(5):
            inst = random_instance(Problem.COGRAPH_DELETION, 8, 31 + seed)
            quarters = FractionalSolution((F(1, 4),) * 8, F(2))
            assert verify_feasible(LpProblem(inst), quarters)


class TestVerifyFeasible:
    def test_star_half_leaves(self):
        inst = gen_star_multicut(6).instance
        sol = FractionalSolution(tuple([F(0)] + [F(1, 2)] * 6), F(3))
        assert verify_feasible(LpProblem(inst, pinned_vertex=0), sol)

    def test_all_zero_fails_on_p4(self):
        inst = Instance(Problem.COGRAPH_DELETION, Graph(4, False, [(0, 1), (1, 2), (2, 3)]))
        sol = FractionalSolution((F(0),) * 4, F(0))
        assert not verify_feasible(LpProblem(inst), sol)

    def test_all_ones_ok_without_pin(self):
        inst = random_instance(Problem.DFVS, 6, 8)
        sol = FractionalSolution((F(1),) * 6, F(6))
        assert verify_feasible(LpProblem(inst), sol)

    def test_pin_violation_detected(self):
        inst = gen_star_multicut(3).instance
        sol = FractionalSolution((F(1),) * 4, F(4))
        assert not verify_feasible(LpProblem(inst, pinned_vertex=0), sol)


class TestFractionalSolutionInvariants:
    def test_value_must_match_total(self):
        with pytest.raises(InputError):
            FractionalSolution((F(1, 2), F(1, 2)), F(2))

    def test_box_enforced(self):
        with pytest.raises(InputError):
            FractionalSolution((F(3, 2), F(0)), F(3, 2))

"""Tests for soft-upper-bound games, bound existence and minimization."""
import pytest

from src.exceptions import BoundsError
from src.models.constraint import ConstraintSpec
from src.models.types import Kind, Measure, Objective
from src.services.replay import is_valid_run
from src.services.violations import (
    ViolationStats,
    bound_existence,
    minimize,
    solve_lv,
    violation_stats,
)

OVERSHOOT_RUN_LEVELS = [0, 2, 3, 0, 1, 3, 4, 3, 5, 6, 1]


class TestViolationStats:
    def test_overshoot_displayed_run(self):
        stats = violation_stats(OVERSHOOT_RUN_LEVELS, 3)
        assert stats == ViolationStats(count=3, max_consecutive=2, sum=6)

    def test_for_measure(self):
        stats = ViolationStats(count=3, max_consecutive=2, sum=6)
        assert stats.for_measure(Measure.COUNT) == 3
        assert stats.for_measure(Measure.CONSECUTIVE) == 2
        assert stats.for_measure(Measure.SUM) == 6

    def test_no_violation(self):
        assert violation_stats([0, 1, 3, 3], 3) == ViolationStats(0, 0, 0)

    def test_measure_ordering(self):
        stats = violation_stats([4, 9, 2, 5, 5, 5, 1], 3)
        assert stats.count >= stats.max_consecutive
        assert stats.sum >= stats.count


class TestSolveLV:
    @pytest.mark.parametrize("V, p1_wins", [(3, True), (2, True), (1, False), (0, False)])
    def test_overshoot_count_budget(self, overshoot, V, p1_wins):
        solution = solve_lv(overshoot, 0, 3, 6, V, Measure.COUNT, Objective.REACH)
        assert solution.p1_wins is p1_wins

    def test_overshoot_tight_upper_bound_loses(self, overshoot):
        assert not solve_lv(overshoot, 0, 3, 3, 0, Measure.COUNT, Objective.REACH).p1_wins

    def test_witness_spends_at_most_budget(self, overshoot):
        solution = solve_lv(overshoot, 0, 3, 6, 2, Measure.COUNT, Objective.REACH)
        run = solution.witness
        assert run is not None
        assert run.states[-1] == "qt"
        assert violation_stats(run.levels, 3).count <= 2
        spec = ConstraintSpec(Kind.LV, 0, U=6, S=3, V=2, measure=Measure.COUNT)
        assert is_valid_run(overshoot, spec, run)

    def test_no_witness_for_infinite_runs(self, overshoot):
        solution = solve_lv(overshoot, 0, 3, 6, 2, Measure.COUNT, Objective.INFINITE_RUN)
        assert solution.p1_wins
        assert solution.witness is None

    def test_sum_budget(self, overshoot):
        assert solve_lv(overshoot, 0, 3, 6, 3, Measure.SUM, Objective.REACH).p1_wins
        assert not solve_lv(overshoot, 0, 3, 6, 2, Measure.SUM, Objective.REACH).p1_wins


class TestMonotonicity:
    @pytest.mark.parametrize("seed", range(24))
    @pytest.mark.parametrize("objective", list(Objective))
    def test_winning_grows_with_v_and_u(self, seeded_arena, seed, objective):
        arena = seeded_arena(seed, n_states=4, p2_fraction=0.4 if seed % 2 else 0.0)
        measure = list(Measure)[seed % 3]
        S = seed % 3
        wins = {
            (U, V): solve_lv(arena, 0, S, U, V, measure, objective, with_witness=False).p1_wins
            for U in range(S, S + 4)
            for V in range(4)
        }
        for (U, V), won in wins.items():
            if won:
                assert wins.get((U + 1, V), True), f"U {U} -> {U + 1} at V {V}"
                assert wins.get((U, V + 1), True), f"V {V} -> {V + 1} at U {U}"


class TestBoundExistence:
    def test_overshoot(self, overshoot):
        assert bound_existence(overshoot, 0, 3, 3, Measure.COUNT, Objective.REACH) == 9
        assert bound_existence(overshoot, 0, 3, 1, Measure.COUNT, Objective.REACH) is None

    def test_invalid(self, overshoot):
        with pytest.raises(BoundsError):
            bound_existence(overshoot, 4, 3, 1, Measure.COUNT, Objective.REACH)
        with pytest.raises(BoundsError):
            bound_existence(overshoot, 0, 3, -1, Measure.COUNT, Objective.REACH)


class TestMinimize:
    def test_count(self, overshoot):
        result = minimize(overshoot, 0, 3, 10, Measure.COUNT, Objective.REACH)
        assert (result.best_v, result.best_u) == (2, 5)
        assert result.solution.p1_wins

    def test_sum(self, overshoot):
        result = minimize(overshoot, 0, 3, 10, Measure.SUM, Objective.REACH)
        assert (result.best_v, result.best_u) == (3, 5)

    def test_consecutive(self, overshoot):
        result = minimize(overshoot, 0, 3, 10, Measure.CONSECUTIVE, Objective.REACH)
        assert result.best_v == 2

    def test_budget_too_small(self, overshoot):
        assert minimize(overshoot, 0, 3, 1, Measure.COUNT, Objective.REACH) is None

    def test_minimal_pair_is_tight(self, overshoot):
        result = minimize(overshoot, 0, 3, 10, Measure.COUNT, Objective.REACH)
        assert not solve_lv(overshoot, 0, 3, result.best_u - 1, result.best_v, Measure.COUNT, Objective.REACH).p1_wins
        assert not solve_lv(overshoot, 0, 3, 9, result.best_v - 1, Measure.COUNT, Objective.REACH).p1_wins

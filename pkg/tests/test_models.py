"""Tests for constraint specs, runs, configurations and checked arithmetic."""
import pytest

from src.constants import INT64_MAX, INT64_MIN
from src.exceptions import ArithmeticOverflowError, BoundsError, ConfigurationError
from src.models.constraint import ConstraintSpec
from src.models.expanded import ERR, Configuration, tainted
from src.models.run import Run
from src.models.types import Kind, Measure, Objective, Player
from src.utils.checked_math import checked_add, checked_mul, checked_sum


class TestConstraintSpec:
    def test_lu_requires_u(self):
        with pytest.raises(ConfigurationError, match="requires U"):
            ConstraintSpec(Kind.LU, 0)

    def test_lw_bounds_order(self):
        with pytest.raises(BoundsError):
            ConstraintSpec(Kind.LW, 3, W=2)

    def test_lw_equal_bounds(self):
        spec = ConstraintSpec(Kind.LW, 2, W=2)
        assert spec.upper == 2

    def test_lv_lists_missing_fields(self):
        with pytest.raises(ConfigurationError, match="S, V, measure"):
            ConstraintSpec(Kind.LV, 0, U=6)

    @pytest.mark.parametrize("L, S, U, V", [(0, 7, 6, 1), (2, 1, 6, 1), (0, 3, 6, -1)])
    def test_lv_bounds(self, L, S, U, V):
        with pytest.raises(BoundsError):
            ConstraintSpec(Kind.LV, L, U=U, S=S, V=V, measure=Measure.COUNT)

    def test_reach_needs_targets(self, two_cycles):
        spec = ConstraintSpec(Kind.L, 0, objective=Objective.REACH)
        with pytest.raises(ConfigurationError, match="target"):
            spec.validate(two_cycles)

    def test_infinite_run_without_targets(self, two_cycles):
        ConstraintSpec(Kind.L, 0, objective=Objective.INFINITE_RUN).validate(two_cycles)

    def test_echo_field_order(self):
        spec = ConstraintSpec(Kind.LV, 0, U=6, S=3, V=3, measure=Measure.SUM)
        echo = spec.echo()
        assert list(echo) == ["kind", "L", "U", "W", "S", "V", "measure", "objective"]
        assert echo["measure"] == "sum"
        assert echo["objective"] == "reach"


class TestRun:
    def test_length_counts_edges(self):
        run = Run((("a", 0), ("b", 1), ("a", 0)), (0, 1))
        assert len(run) == 2
        assert run.states == ["a", "b", "a"]
        assert run.levels == [0, 1, 0]
        assert run.last == ("a", 0)

    def test_step_count_mismatch(self):
        with pytest.raises(ValueError):
            Run((("a", 0),), (0,))


class TestConfiguration:
    def test_names(self):
        assert Configuration("q1", 5).name == "q1@5"
        assert Configuration("q1", 5, 2).name == "q1@5@2"
        assert tainted("q1").name == "q1@bot"
        assert ERR.name == "err"

    def test_badness(self):
        assert ERR.is_err and ERR.is_bad
        assert tainted("q").is_bad and not tainted("q").is_err
        assert not Configuration("q", 0).is_bad


class TestPlayer:
    def test_opponent(self):
        assert Player.P1.opponent is Player.P2
        assert Player.P2.opponent is Player.P1
        assert Player.P2.label == "P2"


class TestCheckedMath:
    def test_add_within_range(self):
        assert checked_add(INT64_MAX - 1, 1) == INT64_MAX

    def test_add_overflow(self):
        with pytest.raises(ArithmeticOverflowError):
            checked_add(INT64_MAX, 1)

    def test_mul_underflow(self):
        with pytest.raises(ArithmeticOverflowError):
            checked_mul(INT64_MIN, 2)

    def test_sum_checks_partial_sums(self):
        with pytest.raises(ArithmeticOverflowError):
            checked_sum([INT64_MAX, 1, -5])
        assert checked_sum([1, 2, 3]) == 6

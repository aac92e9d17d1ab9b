"""Tests for the strict run replayer."""
import pytest

from src.exceptions import InfeasibleRunError
from src.models.constraint import ConstraintSpec
from src.models.run import Run
from src.models.types import Kind, Measure
from src.services.replay import edges_for_states, is_valid_run, next_level, replay_run

OVERSHOOT_RUN = ["q0", "q1", "q1", "q2", "q3", "q2", "q3", "q3", "q2", "q3", "qt"]


def lv_spec(V: int, measure: Measure = Measure.COUNT) -> ConstraintSpec:
    return ConstraintSpec(Kind.LV, 0, U=6, S=3, V=V, measure=measure)


class TestNextLevel:
    def test_kinds(self):
        assert next_level(ConstraintSpec(Kind.L, 0), 2, 100) == 102
        assert next_level(ConstraintSpec(Kind.L, 0), 2, -3) is None
        assert next_level(ConstraintSpec(Kind.LU, 0, U=4), 2, 3) is None
        assert next_level(ConstraintSpec(Kind.LW, 0, W=4), 2, 3) == 4
        assert next_level(ConstraintSpec(Kind.LW, 0, W=4), 2, -3) is None


class TestReplay:
    def test_overshoot_displayed_run(self, overshoot):
        run = replay_run(overshoot, lv_spec(3), edges_for_states(overshoot, OVERSHOOT_RUN))
        assert run.levels == [0, 2, 3, 0, 1, 3, 4, 3, 5, 6, 1]
        assert run.states == OVERSHOOT_RUN

    def test_overshoot_displayed_run_over_budget(self, overshoot):
        with pytest.raises(InfeasibleRunError) as exc:
            replay_run(overshoot, lv_spec(2), edges_for_states(overshoot, OVERSHOOT_RUN))
        assert exc.value.position == 9

    def test_sum_budget(self, overshoot):
        edges = edges_for_states(overshoot, OVERSHOOT_RUN)
        replay_run(overshoot, lv_spec(6, Measure.SUM), edges)
        with pytest.raises(InfeasibleRunError):
            replay_run(overshoot, lv_spec(5, Measure.SUM), edges)

    def test_lower_bound(self, overshoot):
        edges = edges_for_states(overshoot, ["q0", "q1", "q2"])
        with pytest.raises(InfeasibleRunError, match="position 2"):
            replay_run(overshoot, ConstraintSpec(Kind.L, 0), edges)

    def test_disconnected_edges(self, overshoot):
        with pytest.raises(InfeasibleRunError, match="does not leave"):
            replay_run(overshoot, ConstraintSpec(Kind.L, 0), [0, 3])

    def test_unknown_edge_index(self, overshoot):
        with pytest.raises(InfeasibleRunError, match="unknown edge"):
            replay_run(overshoot, ConstraintSpec(Kind.L, 0), [42])

    def test_custom_start(self, pump):
        run = replay_run(pump, ConstraintSpec(Kind.LW, 0, W=5), [6], start="q1", start_level=5)
        assert run.steps == (("q1", 5), ("qt", 0))

    def test_is_valid_run_rejects_forged_levels(self, overshoot):
        spec = ConstraintSpec(Kind.L, 0)
        assert is_valid_run(overshoot, spec, Run((("q0", 0), ("q1", 2)), (0,)))
        assert not is_valid_run(overshoot, spec, Run((("q0", 0), ("q1", 3)), (0,)))


class TestEdgesForStates:
    def test_missing_edge(self, overshoot):
        with pytest.raises(InfeasibleRunError, match="no edge q0->q2"):
            edges_for_states(overshoot, ["q0", "q2"])

    def test_unknown_state(self, overshoot):
        with pytest.raises(InfeasibleRunError, match="unknown state"):
            edges_for_states(overshoot, ["zz", "q0"])

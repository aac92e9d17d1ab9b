"""Property tests for LW run facts the polynomial solver builds on."""
import random

import pytest

try:
    from hypothesis import HealthCheck, given, settings
    from hypothesis import strategies as st
except ModuleNotFoundError:  # pragma: no cover
    pytest.skip("hypothesis not installed", allow_module_level=True)

from src.harness.generator import GenParams, random_arena
from src.harness.path_properties import (
    PathCase,
    check_cycle_excision,
    check_cycle_iteration,
    check_effect_monotone,
    check_higher_start,
    check_replay_from_w,
    cycles_of,
    lw_levels,
    random_case,
)

PROPERTY_SETTINGS = settings(
    max_examples=500,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)


@st.composite
def path_cases(draw: st.DrawFn) -> PathCase:
    seed = draw(st.integers(min_value=0, max_value=10_000))
    n_states = draw(st.integers(min_value=1, max_value=6))
    W = draw(st.integers(min_value=0, max_value=8))
    L = draw(st.integers(min_value=0, max_value=W))
    arena = random_arena(GenParams(seed=seed, n_states=n_states, target_count=0, edge_density=0.5))
    rng = random.Random(draw(st.integers(min_value=0, max_value=10_000)))
    return random_case(rng, arena, L, W)


@PROPERTY_SETTINGS
@given(path_cases())
def test_higher_start_stays_feasible(case: PathCase) -> None:
    assert check_higher_start(case)


@PROPERTY_SETTINGS
@given(path_cases())
def test_effect_shrinks_only_at_w(case: PathCase) -> None:
    assert check_effect_monotone(case)


@PROPERTY_SETTINGS
@given(path_cases())
def test_replay_from_w(case: PathCase) -> None:
    assert check_replay_from_w(case)


@PROPERTY_SETTINGS
@given(path_cases())
def test_cycle_excision(case: PathCase) -> None:
    assert check_cycle_excision(case)


@PROPERTY_SETTINGS
@given(path_cases())
def test_cycle_iteration_stabilizes(case: PathCase) -> None:
    for cycle in cycles_of(case):
        for level in range(case.L, case.W + 1):
            assert check_cycle_iteration(case.arena, case.L, case.W, cycle, level)


class TestLevels:
    def test_clamps_and_fails(self, pump):
        assert lw_levels(pump, 0, 5, [1, 2, 3], 4) == [4, 5, 3, 4]
        assert lw_levels(pump, 0, 5, [6], 4) is None

    def test_pump_cycle_fixed_point(self, pump):
        # q1 -> q2 -> q3 -> q1 settles at W - 1
        assert check_cycle_iteration(pump, 0, 5, (1, 2, 3), 0)
        assert lw_levels(pump, 0, 5, [1, 2, 3], 4)[-1] == 4

    def test_cycles_of(self, pump):
        case = PathCase(pump, 0, 5, (1, 2, 3, 1, 4, 5), 0, 0)
        assert case.states == ["q1", "q2", "q3", "q1", "q2", "q4", "q1"]
        assert (1, 2, 3) in cycles_of(case)
        assert (1, 4, 5) in cycles_of(case)

    def test_excision_of_falling_loop(self, pump):
        # from 5 the first loop ends at 4
        case = PathCase(pump, 0, 5, (1, 2, 3, 1, 2, 3), 5, 5)
        assert lw_levels(pump, 0, 5, case.edges, 5) == [5, 5, 3, 4, 5, 3, 4]
        assert check_cycle_excision(case)

"""Tests for attractors, safety games, simulation and shortest witnesses."""
import random

import pytest

from src.models.expanded import Configuration
from src.models.types import Objective, Player
from src.services.arena_io import parse_arena
from src.services.expansion import build_lu, build_lw
from src.services.game_engine import (
    attractor,
    attractor_ranks,
    shortest_witness,
    simulate,
    solve_expanded,
    solve_safety,
)
from src.services.replay import is_valid_run
from src.models.constraint import ConstraintSpec
from src.models.types import Kind

DIAMOND = """
state a owner=1 init
state b owner=2
state c owner=1
state t owner=1 target
state x owner=1
edge a 0 x
edge a 0 b
edge a 0 c
edge b 0 t
edge b 0 x
edge c 0 t
edge t 0 t
edge x 0 x
"""


class TestAttractor:
    def test_ranks(self):
        arena = parse_arena(DIAMOND)
        rank = attractor_ranks(arena, {"t"}, Player.P1)
        assert rank == {"t": 0, "c": 1, "a": 2}

    def test_opponent_node_needs_all_successors(self):
        arena = parse_arena(DIAMOND)
        region = attractor(arena, {"t"}, Player.P1)
        assert region.wins("a")
        assert region.wins("b", Player.P2)
        assert region.wins("x", Player.P2)

    def test_strategy_lowest_index_edge_down_rank(self):
        arena = parse_arena(DIAMOND)
        region = attractor(arena, {"t"}, Player.P1)
        assert region.strategy == {"a": 2, "c": 5}
        assert region.region() == ["a", "c", "t"]

    def test_avoid_everything_loses_everywhere(self):
        arena = parse_arena(DIAMOND)
        region = solve_safety(arena, arena.states, Player.P1)
        assert region.region(Player.P1) == []

    def test_safety_strategy_stays_inside(self):
        arena = parse_arena(DIAMOND)
        region = solve_safety(arena, {"x"}, Player.P1)
        assert region.wins("a")
        assert region.wins("c")
        assert region.wins("b", Player.P2)
        assert region.strategy["a"] == 2

    def test_simulate_follows_strategy(self):
        arena = parse_arena(DIAMOND)
        region = attractor(arena, {"t"}, Player.P1)
        assert simulate(arena, region, "a", 3) == ["a", "c", "t", "t"]


class TestExpandedGames:
    def test_pump_reach(self, pump):
        winning = build_lw(pump, 0, 5)
        losing = build_lw(pump, 0, 4)
        assert solve_expanded(winning, Objective.REACH).wins(winning.init)
        assert not solve_expanded(losing, Objective.REACH).wins(losing.init)

    def test_err_never_wins(self, overshoot):
        expanded = build_lu(overshoot, 0, 6)
        region = solve_expanded(expanded, Objective.INFINITE_RUN)
        for config in expanded.bad:
            assert region.wins(config, Player.P2)

    def test_overshoot_lu_infinite_run(self, overshoot):
        # q3 loops -1 forever only with credit; q1 +1 overflows U; qt has the zero loop
        expanded = build_lu(overshoot, 0, 6)
        region = solve_expanded(expanded, Objective.INFINITE_RUN)
        assert region.wins(expanded.init)
        assert region.wins(Configuration("qt", 0))

    @pytest.mark.parametrize("seed", range(20))
    def test_more_energy_never_hurts(self, seeded_arena, seed):
        arena = seeded_arena(seed, n_states=4, p2_fraction=0.4)
        W = 2 + seed % 4
        expanded = build_lw(arena, 0, W)
        for objective in Objective:
            region = solve_expanded(expanded, objective)
            for config in region.region():
                for higher in range(config.level + 1, W + 1):
                    above = Configuration(config.state, higher)
                    if above in expanded:
                        assert region.wins(above), f"{objective.value}: {config.name} wins, {above.name} loses"


class TestStrategySoundness:
    @pytest.mark.parametrize("seed", range(25))
    def test_reach_strategy_hits_target(self, seeded_arena, seed):
        arena = seeded_arena(seed, n_states=4, p2_fraction=0.4)
        expanded = build_lw(arena, 0, 3)
        region = solve_expanded(expanded, Objective.REACH)
        rng = random.Random(seed)
        for start in region.region():
            path = simulate(expanded, region, start, len(expanded), lambda node, succ: rng.choice(succ)[1])
            hit = next(i for i, config in enumerate(path) if config in expanded.targets)
            assert not any(config.is_bad for config in path[:hit])

    @pytest.mark.parametrize("seed", range(25))
    def test_safety_strategy_avoids_bad(self, seeded_arena, seed):
        arena = seeded_arena(seed, n_states=4, p2_fraction=0.4, target_count=0)
        expanded = build_lu(arena, 0, 4)
        region = solve_expanded(expanded, Objective.INFINITE_RUN)
        rng = random.Random(seed)
        for start in region.region():
            path = simulate(expanded, region, start, 2 * len(expanded), lambda node, succ: rng.choice(succ)[1])
            assert not any(config.is_bad for config in path)


class TestShortestWitness:
    def test_overshoot_lu_shortest(self, overshoot):
        run = shortest_witness(build_lu(overshoot, 0, 6))
        assert len(run) == 8
        assert run.levels == [0, 2, 3, 4, 1, 2, 4, 5, 0]
        assert run.states[-1] == "qt"
        assert is_valid_run(overshoot, ConstraintSpec(Kind.LU, 0, U=6), run)

    def test_no_witness(self, pump):
        assert shortest_witness(build_lw(pump, 0, 4)) is None

    def test_initial_target(self):
        arena = parse_arena("state q owner=1 init target\nedge q 0 q\n")
        run = shortest_witness(build_lu(arena, 0, 0))
        assert len(run) == 0
        assert run.steps == (("q", 0),)

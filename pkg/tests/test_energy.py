"""Tests for the L-energy solvers."""
import pytest

from src.models.types import Objective, Player
from src.services.arena_io import parse_arena
from src.services.energy import minimal_credits, solve_l_energy
from src.services.expansion import build_l_capped
from src.services.game_engine import solve_expanded

NEEDS_CREDIT = """
state a owner=1 init
state b owner=1
edge a -2 b
edge b 3 a
"""

DRAIN = """
state a owner=1 init
state b owner=1
edge a 1 b
edge b -2 a
"""


class TestOnePlayer:
    def test_positive_cycle_needs_credit_first(self):
        arena = parse_arena(NEEDS_CREDIT)
        region = solve_l_energy(arena, 0)
        assert region.method == "bellman-ford"
        assert not region.wins("a")
        assert region.wins("b")

    def test_negative_cycle_loses(self):
        region = solve_l_energy(parse_arena(DRAIN), 0)
        assert region.region(Player.P2) == ["a", "b"]

    def test_zero_cycle_wins(self):
        arena = parse_arena("state a owner=1 init\nstate b owner=1\nedge a 1 b\nedge b -1 a\n")
        assert solve_l_energy(arena, 0).wins("a")

    def test_overshoot(self, overshoot):
        # q1 pumps +1 forever
        assert solve_l_energy(overshoot, 0).wins("q0")

    def test_shortcut_agrees_with_progress_measure(self, seeded_arena):
        for seed in range(40):
            arena = seeded_arena(seed, n_states=5)
            fast = solve_l_energy(arena, 0)
            slow = solve_l_energy(arena, 0, one_player_shortcut=False)
            assert fast.winner == slow.winner, f"seed {seed}"


class TestProgressMeasure:
    def test_credits(self):
        credit, strategy = minimal_credits(parse_arena(NEEDS_CREDIT))
        assert credit == {"a": 2, "b": 0}
        assert strategy == {"a": 0, "b": 1}

    def test_top_on_losing_cycle(self):
        credit, strategy = minimal_credits(parse_arena(DRAIN))
        assert credit == {"a": None, "b": None}
        assert strategy == {}

    def test_two_player(self, two_player):
        region = solve_l_energy(two_player, 0)
        assert region.method == "progress-measure"
        assert region.credit == {"q0": 0, "q1": 1, "q2": 0, "qt": 0}
        assert region.wins("q0")
        assert region.wins("q1", Player.P2)
        assert set(region.strategy) == {"q0", "q2", "qt"}

    def test_winner_independent_of_lower_bound(self, two_player):
        assert solve_l_energy(two_player, 0).winner == solve_l_energy(two_player, 7).winner

    @pytest.mark.parametrize("seed", range(12))
    def test_matches_capped_oracle(self, seeded_arena, seed):
        arena = seeded_arena(seed, n_states=4, p2_fraction=0.5)
        region = solve_l_energy(arena, 0)
        expanded = build_l_capped(arena, 0)
        assert region.wins(arena.initial) == solve_expanded(expanded, Objective.INFINITE_RUN).wins(expanded.init)

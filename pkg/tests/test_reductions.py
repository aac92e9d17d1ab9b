"""Tests for the energy/reachability reductions."""
from typing import List

import pytest

from src.exceptions import ConfigurationError
from src.models.types import Objective, Player
from src.services.energy import solve_l_energy
from src.services.expansion import build_l_capped
from src.services.game_engine import solve_expanded
from src.services.reductions import reduce_energy_to_reach, reduce_reach_to_energy


def simple_cycles(arena, allowed=None) -> List[List[int]]:
    """Edge-index lists of every simple cycle, each found from its lowest state."""
    allowed = set(arena.states if allowed is None else allowed)
    order = {q: i for i, q in enumerate(arena.states)}
    found: List[List[int]] = []

    def extend(root, state, edges, seen):
        for idx in arena.out_edges(state):
            dst = arena.edges[idx].dst
            if dst not in allowed or order[dst] < order[root]:
                continue
            if dst == root:
                found.append(edges + [idx])
            elif dst not in seen:
                extend(root, dst, edges + [idx], seen | {dst})

    for root in arena.states:
        if root in allowed:
            extend(root, root, [], {root})
    return found


def cycle_weight(arena, edges: List[int]) -> int:
    return sum(arena.edges[idx].weight for idx in edges)


class TestEnergyToReach:
    def test_structure(self, two_player):
        out = reduce_energy_to_reach(two_player)
        reduced = out.arena
        assert out.scale == 5
        assert out.delta == 15
        # qt is taken by the source arena
        assert reduced.targets == frozenset(["qt_1"])
        assert len(reduced.states) == 9
        assert len(reduced.edges) == 6 + 2 * 4 + 1
        assert out.mapping["q0"] == ("q0", "q0_c")
        assert reduced.owner["q1"] is Player.P2
        assert reduced.owner["q1_c"] is Player.P1

    def test_scaled_weights(self, two_player):
        reduced = reduce_energy_to_reach(two_player).arena
        assert [e.weight for e in reduced.edges[:6]] == [6, -4, 1, 6, -9, 1]
        assert reduced.edges[0].dst == "q1_c"

    def test_mapping_comments(self, two_player):
        lines = reduce_energy_to_reach(two_player).mapping_comments()
        assert lines[:2] == ["# scale 5", "# delta 15"]
        assert "# q1 -> q1, q1_c" in lines

    @pytest.mark.parametrize("seed", range(20))
    def test_scaling_keeps_cycle_signs(self, seeded_arena, seed):
        arena = seeded_arena(seed, n_states=4, p2_fraction=0.4, target_count=0, weight_range=(-4, 4))
        reduced = reduce_energy_to_reach(arena).arena
        for cycle in simple_cycles(arena):
            original = cycle_weight(arena, cycle)
            # edge i keeps index i; the copy states return with weight 0
            scaled = cycle_weight(reduced, cycle)
            assert scaled != 0
            assert (scaled > 0) == (original >= 0), f"cycle {cycle}: {original} -> {scaled}"

    @pytest.mark.parametrize("seed", range(8))
    def test_preserves_winner(self, seeded_arena, seed):
        arena = seeded_arena(seed, n_states=3, p2_fraction=0.4, target_count=0)
        energy = solve_l_energy(arena, 0).wins(arena.initial)
        reduced = reduce_energy_to_reach(arena).arena
        expanded = build_l_capped(reduced, 0, objective=Objective.REACH)
        assert solve_expanded(expanded, Objective.REACH).wins(expanded.init) == energy


class TestReachToEnergy:
    def test_structure(self, pump):
        out = reduce_reach_to_energy(pump)
        reduced = out.arena
        assert out.scale == 7
        assert out.delta is None
        assert reduced.initial == "start"
        assert reduced.targets == frozenset()
        assert "sink" not in reduced.states
        assert reduced.edges[-1].src == "start"
        assert reduced.edges[-1].weight == 7
        assert reduced.successors("qt") == [(reduced.out_edges("qt")[0], "qt")]
        assert reduced.edges[reduced.out_edges("qt")[0]].weight == 0
        assert out.mapping["q0"] == ("q0",)

    def test_unreachable_initial_goes_to_sink(self, two_player):
        out = reduce_reach_to_energy(two_player)
        reduced = out.arena
        assert set(reduced.states) == {"start", "qt", "sink"}
        assert out.mapping["q0"] == ("sink",)
        assert not solve_l_energy(reduced, 0).wins(reduced.initial)

    def test_pump_wins(self, pump):
        reduced = reduce_reach_to_energy(pump).arena
        assert solve_l_energy(reduced, 0).wins(reduced.initial)

    def test_needs_targets(self, two_cycles):
        with pytest.raises(ConfigurationError):
            reduce_reach_to_energy(two_cycles)

    @pytest.mark.parametrize("seed", range(20))
    def test_scaling_keeps_cycle_signs(self, seeded_arena, seed):
        arena = seeded_arena(seed, n_states=4, p2_fraction=0.4, weight_range=(-4, 4))
        out = reduce_reach_to_energy(arena)
        reduced = out.arena
        inner = [q for q in arena.states if q not in arena.targets and out.mapping[q] == (q,)]
        for cycle in simple_cycles(arena, inner):
            original = cycle_weight(arena, cycle)
            scaled = 0
            for idx in cycle:
                src = arena.edges[idx].src
                position = arena.out_edges(src).index(idx)
                scaled += reduced.edges[reduced.out_edges(src)[position]].weight
            assert scaled != 0
            assert (scaled > 0) == (original > 0), f"cycle {cycle}: {original} -> {scaled}"

    @pytest.mark.parametrize("seed", range(8))
    def test_preserves_winner(self, seeded_arena, seed):
        arena = seeded_arena(seed, n_states=3, p2_fraction=0.4)
        reduced = reduce_reach_to_energy(arena).arena
        energy = solve_l_energy(reduced, 0).wins(reduced.initial)
        expanded = build_l_capped(arena, 0, objective=Objective.REACH)
        assert solve_expanded(expanded, Objective.REACH).wins(expanded.init) == energy

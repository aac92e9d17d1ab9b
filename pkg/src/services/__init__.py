"""Services package"""
from .arena_io import load_arena, parse_arena, serialize_arena, serialize_expanded
from .energy import EnergyRegion, solve_l_energy
from .expansion import build_l_capped, build_lu, build_luv, build_lw
from .game_engine import WinningRegion, attractor, shortest_witness, solve_expanded, solve_safety
from .lw_solver import label_dag, solve_lw_2p, solve_lw_reach_1p, universal_cycle_table
from .reductions import reduce_energy_to_reach, reduce_reach_to_energy
from .replay import replay_run
from .solver_service import SolverService
from .violations import bound_existence, minimize, solve_lv, violation_stats

__all__ = [
    "load_arena",
    "parse_arena",
    "serialize_arena",
    "serialize_expanded",
    "EnergyRegion",
    "solve_l_energy",
    "build_l_capped",
    "build_lu",
    "build_luv",
    "build_lw",
    "WinningRegion",
    "attractor",
    "shortest_witness",
    "solve_expanded",
    "solve_safety",
    "label_dag",
    "solve_lw_2p",
    "solve_lw_reach_1p",
    "universal_cycle_table",
    "reduce_energy_to_reach",
    "reduce_reach_to_energy",
    "replay_run",
    "SolverService",
    "bound_existence",
    "minimize",
    "solve_lv",
    "violation_stats",
]

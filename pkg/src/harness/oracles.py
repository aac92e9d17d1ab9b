"""
Brute-force oracles the solvers are checked against.

These share no fixed-point code with the solvers: the expanded-arena oracle
iterates a naive one-step predecessor operator to a fixed point, the
enumeration oracle tries every memoryless P2 choice, and the bounded run
oracle searches runs of bounded length directly.
"""
import itertools
import logging
from collections import deque
from typing import Dict, Hashable, List, Optional, Set

from ..config import Config
from ..exceptions import BlowUpGuardError, ConfigurationError, InfeasibleRunError
from ..models.arena import Arena
from ..models.constraint import ConstraintSpec
from ..models.expanded import ExpandedArena
from ..models.run import Run
from ..models.types import Kind, Objective, Player
from ..services.energy import solve_l_energy
from ..services.expansion import build_lw, counter_after
from ..services.game_engine import WinningRegion
from ..services.lw_solver import solve_lw_reach_1p
from ..services.reductions import reduce_reach_to_energy
from ..services.replay import next_level, replay_run
from ..services.violations import violation_stats

logger = logging.getLogger(__name__)


def _naive_attractor(expanded: ExpandedArena, goal: Set[Hashable], player: Player) -> Set[Hashable]:
    # round-based: re-check predecessors of the last round, scanning all successors
    preds: Dict[Hashable, Set[Hashable]] = {node: set() for node in expanded.nodes}
    for node in expanded.nodes:
        for _, dst in expanded.successors(node):
            preds[dst].add(node)

    won = set(goal)
    fresh = set(goal)
    while fresh:
        candidates = {p for node in fresh for p in preds[node] if p not in won}
        fresh = set()
        for node in candidates:
            succ = [dst for _, dst in expanded.successors(node)]
            if expanded.owner_of(node) is player:
                forced = any(dst in won for dst in succ)
            else:
                forced = all(dst in won for dst in succ)
            if forced:
                fresh.add(node)
        won |= fresh
    return won


def oracle_solve(expanded: ExpandedArena, objective: Objective) -> WinningRegion:
    """
    Winner of every configuration by naive fixed-point iteration.

    REACH: P1 attractor of the targets. INFINITE_RUN: complement of P2's
    attractor of the bad configurations. No strategy is returned.
    """
    if objective is Objective.REACH:
        won = _naive_attractor(expanded, set(expanded.targets), Player.P1)
        winner = {c: Player.P1 if c in won else Player.P2 for c in expanded.nodes}
    else:
        lost = _naive_attractor(expanded, set(expanded.bad), Player.P2)
        winner = {c: Player.P2 if c in lost else Player.P1 for c in expanded.nodes}
    logger.debug(f"Oracle on {expanded.semantics}: {len(expanded)} configs")
    return WinningRegion(winner)


def _one_player_wins(arena: Arena, spec: ConstraintSpec) -> bool:
    if spec.kind is Kind.LW:
        if spec.objective is Objective.REACH:
            return solve_lw_reach_1p(arena, spec.L, spec.W).reachable
        expanded = build_lw(arena, spec.L, spec.W)
        return oracle_solve(expanded, Objective.INFINITE_RUN).wins(expanded.init)
    if spec.objective is Objective.REACH:
        reduced = reduce_reach_to_energy(arena).arena
        return solve_l_energy(reduced, spec.L).wins(reduced.initial)
    return solve_l_energy(arena, spec.L).wins(arena.initial)


def enumerate_p2_memoryless(arena: Arena, spec: ConstraintSpec) -> Player:
    """
    Winner at the initial state, found by fixing every memoryless P2 choice
    and solving the resulting one-player game.

    P2 wins iff some choice leaves P1 losing.

    Raises:
        ConfigurationError: For kinds other than L and LW
        BlowUpGuardError: If the product of P2 out-degrees exceeds
            Config.P2_ENUMERATION_LIMIT
    """
    if spec.kind not in (Kind.L, Kind.LW):
        raise ConfigurationError(f"memoryless enumeration supports L and LW, not {spec.kind.value}")
    spec.validate(arena)

    p2_states = arena.p2_states
    options = [arena.out_edges(q) for q in p2_states]
    combos = 1
    for choices in options:
        combos *= len(choices)
    if combos > Config.P2_ENUMERATION_LIMIT:
        raise BlowUpGuardError(
            f"{combos} memoryless P2 strategies exceed the limit {Config.P2_ENUMERATION_LIMIT}"
        )

    for picks in itertools.product(*options):
        choice = dict(zip(p2_states, picks))
        if not _one_player_wins(arena.fix_p2_choices(choice), spec):
            logger.debug(f"P2 wins with memoryless choice {choice}")
            return Player.P2
    return Player.P1


def bounded_run_oracle(arena: Arena, spec: ConstraintSpec, max_len: int) -> Optional[Run]:
    """
    Shortest run of at most ``max_len`` edges from (init, L) to a target
    that respects the spec, found by breadth-first search over
    (state, level, violation counter).

    The run is replayed strictly and, for LV, its violations recounted from
    the levels before it is returned.

    Raises:
        ConfigurationError: If the arena has P2 states or no targets
    """
    if not arena.is_one_player:
        raise ConfigurationError("the bounded run oracle needs a one-player arena")
    spec.validate(arena)
    if spec.objective is not Objective.REACH:
        raise ConfigurationError("the bounded run oracle searches reachability runs")

    def counter_of(counter: int, level: int) -> int:
        if spec.kind is not Kind.LV:
            return 0
        return counter_after(counter, level, spec.S, spec.measure)

    start_counter = counter_of(0, spec.L)
    if spec.kind is Kind.LV and start_counter > spec.V:
        return None
    start = (arena.initial, spec.L, start_counter)
    parent: Dict[tuple, Optional[tuple]] = {start: None}
    frontier = deque([(start, 0)])
    found = start if arena.initial in arena.targets else None

    while frontier and found is None:
        node, dist = frontier.popleft()
        if dist >= max_len:
            continue
        state, level, counter = node
        for idx in arena.out_edges(state):
            edge = arena.edges[idx]
            new_level = next_level(spec, level, edge.weight)
            if new_level is None:
                continue
            new_counter = counter_of(counter, new_level)
            if spec.kind is Kind.LV and new_counter > spec.V:
                continue
            succ = (edge.dst, new_level, new_counter)
            if succ in parent:
                continue
            parent[succ] = (node, idx)
            if edge.dst in arena.targets:
                found = succ
                break
            frontier.append((succ, dist + 1))

    if found is None:
        return None

    edges: List[int] = []
    node = found
    while parent[node] is not None:
        node, idx = parent[node]
        edges.append(idx)
    edges.reverse()

    run = replay_run(arena, spec, edges)
    if spec.kind is Kind.LV:
        spent = violation_stats(run.levels, spec.S).for_measure(spec.measure)
        if spent > spec.V:
            raise InfeasibleRunError(f"bounded run spends {spent} > V={spec.V} violations")
    return run

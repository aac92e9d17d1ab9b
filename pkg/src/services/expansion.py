"""
Expanded arena construction.

Every builder explores forward from (initial state, L) and materializes only
the reachable fragment. A step that leaves the energy bounds goes to the
single ERR sink; a step that overflows the violation budget goes to the
absorbing tainted copy of its destination state.
"""
import logging
from collections import deque
from typing import Callable, Dict, List, Optional

from ..config import Config
from ..exceptions import BlowUpGuardError, BoundsError
from ..models.arena import Arena
from ..models.expanded import ERR, Configuration, ExpandedArena, ExpandedEdge, tainted
from ..models.types import Measure, Objective, Player
from ..utils.checked_math import checked_add

logger = logging.getLogger(__name__)

# (config, arena edge index) -> successor config, for non-bad configs only
StepFn = Callable[[Configuration, int], Configuration]


def _explore(
    arena: Arena,
    init: Configuration,
    step: StepFn,
    semantics: str,
    max_configs: Optional[int] = None,
) -> ExpandedArena:
    limit = max_configs if max_configs is not None else Config.MAX_EXPANDED_CONFIGS
    configs: List[Configuration] = [init]
    seen = {init}
    owner: Dict[Configuration, Player] = {}
    edges: List[ExpandedEdge] = []
    queue = deque([init])

    while queue:
        config = queue.popleft()
        if config.is_err:
            owner[config] = Player.P1
            edges.append(ExpandedEdge(config, 0, config, None))
            continue

        owner[config] = arena.owner_of(config.state)
        for idx in arena.out_edges(config.state):
            edge = arena.edges[idx]
            if config.tainted:
                succ = tainted(edge.dst)
            else:
                succ = step(config, idx)
            edges.append(ExpandedEdge(config, edge.weight, succ, idx))
            if succ not in seen:
                seen.add(succ)
                configs.append(succ)
                queue.append(succ)
                if len(configs) > limit:
                    raise BlowUpGuardError(
                        f"expanded arena {semantics} exceeds {limit} configurations"
                    )

    targets = [c for c in configs if not c.is_bad and c.state in arena.targets]
    bad = [c for c in configs if c.is_bad]
    logger.debug(
        f"Expanded {semantics}: {len(configs)} configs, {len(edges)} edges, {len(bad)} bad"
    )
    return ExpandedArena(configs, owner, edges, init, targets, bad, semantics)


def build_lu(arena: Arena, L: int, U: int, max_configs: Optional[int] = None) -> ExpandedArena:
    """
    Build the reachable fragment of the strict [L, U] expanded arena.

    Args:
        arena: Valid arena
        L: Lower bound (and initial level)
        U: Strict upper bound

    Returns:
        ExpandedArena whose configurations are (state, level)

    Raises:
        BoundsError: If L > U
        BlowUpGuardError: If the fragment exceeds the size guard
    """
    if L > U:
        raise BoundsError(f"L={L} > U={U}")

    def step(config: Configuration, idx: int) -> Configuration:
        edge = arena.edges[idx]
        level = checked_add(config.level, edge.weight)
        if level < L or level > U:
            return ERR
        return Configuration(edge.dst, level)

    return _explore(arena, Configuration(arena.initial, L), step, f"LU[{L},{U}]", max_configs)


def build_lw(arena: Arena, L: int, W: int, max_configs: Optional[int] = None) -> ExpandedArena:
    """
    Build the reachable fragment of the weak-upper-bound expanded arena.

    Levels are clamped at W: a step from l with weight w lands on
    min(W, l + w), and goes to ERR only when l + w < L.

    Raises:
        BoundsError: If L > W
        BlowUpGuardError: If the fragment exceeds the size guard
    """
    if L > W:
        raise BoundsError(f"L={L} > W={W}")

    def step(config: Configuration, idx: int) -> Configuration:
        edge = arena.edges[idx]
        level = checked_add(config.level, edge.weight)
        if level < L:
            return ERR
        return Configuration(edge.dst, min(W, level))

    return _explore(arena, Configuration(arena.initial, L), step, f"LW[{L},{W}]", max_configs)


def counter_after(counter: int, level: int, S: int, measure: Measure) -> int:
    """
    Violation counter after entering a position at ``level``.

    Count adds one per violating position, Consecutive tracks the current
    block of violating positions, Sum adds the excess over S.
    """
    violating = level > S
    if measure is Measure.COUNT:
        return counter + 1 if violating else counter
    if measure is Measure.CONSECUTIVE:
        return counter + 1 if violating else 0
    return checked_add(counter, level - S) if violating else counter


def build_luv(
    arena: Arena,
    L: int,
    S: int,
    U: int,
    V: int,
    measure: Measure,
    max_configs: Optional[int] = None,
) -> ExpandedArena:
    """
    Build the soft-upper-bound expanded arena for one violation measure.

    Configurations are (state, level, counter). Levels outside [L, U] go to
    ERR; a counter above V goes to the tainted copy of the destination.

    Args:
        arena: Valid arena
        L: Lower bound (and initial level)
        S: Soft upper bound
        U: Strict upper bound
        V: Violation budget for the selected measure
        measure: Which violation measure the counter tracks

    Raises:
        BoundsError: Unless L <= S <= U and V >= 0
    """
    if not (L <= S <= U):
        raise BoundsError(f"expected L <= S <= U, got {L}, {S}, {U}")
    if V < 0:
        raise BoundsError(f"V must be nonnegative, got {V}")

    def step(config: Configuration, idx: int) -> Configuration:
        edge = arena.edges[idx]
        level = checked_add(config.level, edge.weight)
        if level < L or level > U:
            return ERR
        counter = counter_after(config.counter, level, S, measure)
        if counter > V:
            return tainted(edge.dst)
        return Configuration(edge.dst, level, counter)

    init_counter = counter_after(0, L, S, measure)
    init = Configuration(arena.initial, L, init_counter)
    if init_counter > V:
        init = tainted(arena.initial)
    semantics = f"LUV[{L},{S},{U},V={V},{measure.value}]"
    return _explore(arena, init, step, semantics, max_configs)


def default_cap(arena: Arena, L: int, objective: Objective = Objective.INFINITE_RUN) -> int:
    """
    Cap used by the capped L-energy stand-in.

    Infinite runs: L + sum of positive weights + 1. Reachability:
    L + sum of |weights| + 1, so the capped level can still pay for every
    drop on the way to a target.
    """
    cap = checked_add(checked_add(L, arena.positive_weight_sum()), 1)
    if objective is Objective.REACH:
        cap = checked_add(cap, arena.negative_weight_sum())
    return cap


def build_l_capped(
    arena: Arena,
    L: int,
    cap: Optional[int] = None,
    objective: Objective = Objective.INFINITE_RUN,
    max_configs: Optional[int] = None,
) -> ExpandedArena:
    """
    Finite stand-in for the unbounded L-energy arena: LW semantics with a
    cap large enough that clamping never changes the winner.

    Args:
        arena: Valid arena
        L: Lower bound
        cap: Explicit cap (default: default_cap for the objective)
        objective: Objective the arena will be solved for
    """
    if cap is None:
        cap = default_cap(arena, L, objective)
    expanded = build_lw(arena, L, cap, max_configs)
    expanded.semantics = f"L[{L}]~cap{cap}"
    return expanded

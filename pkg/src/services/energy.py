"""
L-energy games with an infinite-run objective.

Two-player arenas are solved by lifting a progress measure (the minimal
initial credit per state). Arenas owned entirely by P1 short-circuit to a
Bellman-Ford style search for a feasible non-negative lasso.
"""
import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..models.arena import Arena
from ..models.types import Player
from ..utils.checked_math import checked_add
from .game_engine import WinningRegion

logger = logging.getLogger(__name__)


@dataclass
class EnergyRegion(WinningRegion):
    """
    Winning region of an L-energy game.

    ``credit[q]`` is the minimal extra energy above L needed at q, None
    meaning no finite credit suffices. Only filled by the progress measure.
    """
    credit: Optional[Dict[str, Optional[int]]] = None
    method: str = "progress-measure"


def minimal_credits(arena: Arena) -> Tuple[Dict[str, Optional[int]], Dict[str, int]]:
    """
    Least fixed point of the energy progress measure.

    Values live in [0, C] plus top (None), C being the sum of negative-weight
    magnitudes: a finite minimal credit never exceeds what one acyclic
    prefix can spend.

    Returns:
        (credit per state, P1 strategy on states with finite credit)
    """
    cap = arena.negative_weight_sum()
    credit: Dict[str, Optional[int]] = {q: 0 for q in arena.states}
    preds: Dict[str, List[str]] = {q: [] for q in arena.states}
    for edge in arena.edges:
        preds[edge.dst].append(edge.src)

    def need(idx: int) -> Optional[int]:
        edge = arena.edges[idx]
        after = credit[edge.dst]
        if after is None:
            return None
        value = max(0, checked_add(after, -edge.weight))
        return value if value <= cap else None

    def lift(state: str) -> Optional[int]:
        needs = [need(idx) for idx in arena.out_edges(state)]
        if arena.owner_of(state) is Player.P1:
            finite = [n for n in needs if n is not None]
            return min(finite) if finite else None
        if any(n is None for n in needs):
            return None
        return max(needs)

    queue = deque(arena.states)
    queued = set(arena.states)
    lifts = 0
    while queue:
        state = queue.popleft()
        queued.discard(state)
        if credit[state] is None:
            continue
        new = lift(state)
        if new is None or new > credit[state]:
            credit[state] = new
            lifts += 1
            for pred in preds[state]:
                if pred not in queued:
                    queued.add(pred)
                    queue.append(pred)
    logger.debug(f"Progress measure stable after {lifts} lifts (cap {cap})")

    strategy: Dict[str, int] = {}
    for state in arena.states:
        if arena.owner_of(state) is Player.P1 and credit[state] is not None:
            strategy[state] = next(
                idx for idx in arena.out_edges(state) if need(idx) == credit[state]
            )
    return credit, strategy


def _feasible_lasso_from(arena: Arena, source: str) -> bool:
    """
    One-player check: is there an infinite run from (source, 0) that never
    goes below 0?

    Longest feasible levels are relaxed |Q|-1 times; a further improvement
    means a feasible positive cycle. Otherwise a cycle made of tight edges
    (best[u] + w == best[v]) is a feasible zero cycle.
    """
    best: Dict[str, Optional[int]] = {q: None for q in arena.states}
    best[source] = 0

    def relax() -> bool:
        changed = False
        for edge in arena.edges:
            base = best[edge.src]
            if base is None:
                continue
            level = checked_add(base, edge.weight)
            if level < 0:
                continue
            if best[edge.dst] is None or level > best[edge.dst]:
                best[edge.dst] = level
                changed = True
        return changed

    for _ in range(len(arena.states) - 1):
        if not relax():
            break
    if relax():
        return True

    tight: Dict[str, List[str]] = {q: [] for q in arena.states if best[q] is not None}
    for edge in arena.edges:
        if best[edge.src] is None:
            continue
        if best[edge.src] + edge.weight == best[edge.dst]:
            tight[edge.src].append(edge.dst)
    return _has_cycle(tight)


def _has_cycle(adjacency: Dict[str, List[str]]) -> bool:
    """True when the directed graph has a cycle (Kahn peel leaves a node)."""
    indegree = {node: 0 for node in adjacency}
    for node, succs in adjacency.items():
        for succ in succs:
            indegree[succ] += 1
    queue = deque(node for node, deg in indegree.items() if deg == 0)
    removed = 0
    while queue:
        node = queue.popleft()
        removed += 1
        for succ in adjacency[node]:
            indegree[succ] -= 1
            if indegree[succ] == 0:
                queue.append(succ)
    return removed < len(adjacency)


def solve_l_energy(arena: Arena, L: int, one_player_shortcut: bool = True) -> EnergyRegion:
    """
    Solve the L-energy game with an infinite-run objective from every state.

    P1 wins at q iff she can keep the level >= L forever starting from
    (q, L). The winner does not depend on L; the bound only shifts levels.

    Args:
        arena: Valid arena
        L: Lower bound (also the initial level)
        one_player_shortcut: Use the Bellman-Ford check on all-P1 arenas

    Returns:
        EnergyRegion over arena states
    """
    if one_player_shortcut and arena.is_one_player:
        winner = {
            q: Player.P1 if _feasible_lasso_from(arena, q) else Player.P2
            for q in arena.states
        }
        logger.info(
            f"L-energy (one player, L={L}): P1 wins {sum(w is Player.P1 for w in winner.values())}"
            f"/{len(winner)} states"
        )
        return EnergyRegion(winner, {}, None, "bellman-ford")

    credit, strategy = minimal_credits(arena)
    winner = {q: Player.P1 if credit[q] == 0 else Player.P2 for q in arena.states}
    strategy = {q: idx for q, idx in strategy.items() if winner[q] is Player.P1}
    logger.info(
        f"L-energy (L={L}): P1 wins {sum(w is Player.P1 for w in winner.values())}"
        f"/{len(winner)} states"
    )
    return EnergyRegion(winner, strategy, credit, "progress-measure")

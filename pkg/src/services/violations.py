"""
Soft upper bounds: violation measures, LV games, bound existence and
violation minimization.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from ..exceptions import BoundsError
from ..models.arena import Arena, max_pos_weight
from ..models.expanded import ExpandedArena
from ..models.run import Run
from ..models.types import Measure, Objective
from ..utils.checked_math import checked_add, checked_mul
from .expansion import build_luv
from .game_engine import WinningRegion, shortest_witness, solve_expanded

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ViolationStats:
    """
    Violations of a soft bound along a level sequence.

    count >= max_consecutive and sum >= count always hold.
    """
    count: int
    max_consecutive: int
    sum: int

    def for_measure(self, measure: Measure) -> int:
        if measure is Measure.COUNT:
            return self.count
        if measure is Measure.CONSECUTIVE:
            return self.max_consecutive
        return self.sum


def violation_stats(levels: Sequence[int], S: int) -> ViolationStats:
    """
    Count the positions above S, the longest block of them and the total
    excess above S.

    Args:
        levels: Per-position energy levels of a run
        S: Soft upper bound

    Returns:
        ViolationStats
    """
    count = 0
    longest = 0
    block = 0
    total = 0
    for level in levels:
        if level > S:
            count += 1
            block += 1
            longest = max(longest, block)
            total = checked_add(total, level - S)
        else:
            block = 0
    return ViolationStats(count, longest, total)


@dataclass
class LVSolution:
    """Solved LV game: expanded arena, winning region and optional witness"""
    expanded: ExpandedArena
    region: WinningRegion
    witness: Optional[Run] = None

    @property
    def p1_wins(self) -> bool:
        return self.region.wins(self.expanded.init)


def solve_lv(
    arena: Arena,
    L: int,
    S: int,
    U: int,
    V: int,
    measure: Measure,
    objective: Objective,
    with_witness: bool = True,
) -> LVSolution:
    """
    Solve a soft-upper-bound game on its expanded arena.

    Reachability is an attractor to non-bad target configurations; infinite
    runs are a safety game avoiding ERR and tainted configurations. For
    one-player reachability the shortest witness run is attached.

    Raises:
        BoundsError: Unless L <= S <= U and V >= 0
    """
    expanded = build_luv(arena, L, S, U, V, measure)
    region = solve_expanded(expanded, objective)
    solution = LVSolution(expanded, region)
    if with_witness and objective is Objective.REACH and arena.is_one_player and solution.p1_wins:
        solution.witness = shortest_witness(expanded)
    logger.debug(
        f"LV[{L},{S},{U}] V={V} {measure.value} {objective.value}: "
        f"{'P1' if solution.p1_wins else 'P2'} ({len(expanded)} configs)"
    )
    return solution


def bound_existence(
    arena: Arena,
    L: int,
    S: int,
    V: int,
    measure: Measure,
    objective: Objective,
) -> Optional[int]:
    """
    Decide whether some strict bound U makes the LV game winnable with
    budget V.

    Above S the level rises by at most max_pos_weight per violating
    position, so U = S + V * w_max is as good as any larger U.

    Returns:
        That U when P1 wins with it, None otherwise

    Raises:
        BoundsError: If L > S or V < 0
    """
    if L > S:
        raise BoundsError(f"L={L} > S={S}")
    if V < 0:
        raise BoundsError(f"V must be nonnegative, got {V}")
    U = checked_add(S, checked_mul(V, max_pos_weight(arena)))
    if solve_lv(arena, L, S, U, V, measure, objective, with_witness=False).p1_wins:
        return U
    return None


@dataclass
class MinimizeResult:
    """Least violation budget and, for it, the least strict bound"""
    best_v: int
    best_u: int
    solution: LVSolution


def minimize(
    arena: Arena,
    L: int,
    S: int,
    v_max: int,
    measure: Measure,
    objective: Objective,
) -> Optional[MinimizeResult]:
    """
    Find the least V <= v_max for which some U wins, then the least such U.

    Both searches are binary searches: winning is monotone in V (the bad
    set shrinks) and in U (more configurations stay in bounds).

    Returns:
        MinimizeResult, or None when even v_max is not enough
    """
    if v_max < 0:
        raise BoundsError(f"V_max must be nonnegative, got {v_max}")
    if bound_existence(arena, L, S, v_max, measure, objective) is None:
        logger.info(f"No bound wins with V <= {v_max}")
        return None

    lo, hi = 0, v_max
    while lo < hi:
        mid = (lo + hi) // 2
        if bound_existence(arena, L, S, mid, measure, objective) is not None:
            hi = mid
        else:
            lo = mid + 1
    best_v = lo

    u_lo = S
    u_hi = checked_add(S, checked_mul(best_v, max_pos_weight(arena)))
    while u_lo < u_hi:
        mid = (u_lo + u_hi) // 2
        if solve_lv(arena, L, S, mid, best_v, measure, objective, with_witness=False).p1_wins:
            u_hi = mid
        else:
            u_lo = mid + 1
    best_u = u_lo

    solution = solve_lv(arena, L, S, best_u, best_v, measure, objective)
    logger.info(f"Minimized {measure.value}: V={best_v}, U={best_u}")
    return MinimizeResult(best_v, best_u, solution)

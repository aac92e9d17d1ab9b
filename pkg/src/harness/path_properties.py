"""
Properties of LW runs the polynomial solver relies on, as executable checks
over (path, level) cases.

Each check returns True when the property holds for the case (including
cases the property says nothing about) and False on a counterexample.
"""
import logging
import random
from dataclasses import dataclass
from typing import List, Optional, Sequence

from ..models.arena import Arena

logger = logging.getLogger(__name__)


def lw_levels(arena: Arena, L: int, W: int, edges: Sequence[int], level: int) -> Optional[List[int]]:
    """
    Levels of an edge path replayed from ``level`` under LW semantics, None
    when some step drops below L. Edge continuity is not checked here.
    """
    levels = [level]
    for idx in edges:
        raw = level + arena.edges[idx].weight
        if raw < L:
            return None
        level = min(W, raw)
        levels.append(level)
    return levels


@dataclass(frozen=True)
class PathCase:
    """A consecutive edge path and two start levels u <= v in [L, W]"""
    arena: Arena
    L: int
    W: int
    edges: tuple
    u: int
    v: int

    @property
    def states(self) -> List[str]:
        if not self.edges:
            return []
        return [self.arena.edges[self.edges[0]].src] + [self.arena.edges[i].dst for i in self.edges]


def random_path(rng: random.Random, arena: Arena, start: str, length: int) -> tuple:
    """Random walk of ``length`` edges from ``start``."""
    edges = []
    state = start
    for _ in range(length):
        idx = rng.choice(arena.out_edges(state))
        edges.append(idx)
        state = arena.edges[idx].dst
    return tuple(edges)


def random_case(rng: random.Random, arena: Arena, L: int, W: int, max_len: int = 8) -> PathCase:
    start = rng.choice(arena.states)
    edges = random_path(rng, arena, start, rng.randint(1, max_len))
    u = rng.randint(L, W)
    v = rng.randint(u, W)
    return PathCase(arena, L, W, edges, u, v)


def check_higher_start(case: PathCase) -> bool:
    """Feasible from u implies feasible from v >= u, ending at least as high."""
    low = lw_levels(case.arena, case.L, case.W, case.edges, case.u)
    if low is None:
        return True
    high = lw_levels(case.arena, case.L, case.W, case.edges, case.v)
    return high is not None and all(h >= l for h, l in zip(high, low))


def check_effect_monotone(case: PathCase) -> bool:
    """
    The effect (end minus start) from v >= u is at most the effect from u,
    and a strictly smaller effect means the replay from v touched W.
    """
    low = lw_levels(case.arena, case.L, case.W, case.edges, case.u)
    high = lw_levels(case.arena, case.L, case.W, case.edges, case.v)
    if low is None or high is None:
        return True
    effect_u = low[-1] - case.u
    effect_v = high[-1] - case.v
    if effect_v > effect_u:
        return False
    if effect_v < effect_u:
        return case.W in high[1:]
    return True


def check_replay_from_w(case: PathCase) -> bool:
    """
    Replaying a feasible run from W ends at W when the run peaks at its end,
    and at W + (end - start) when it peaks at its start.
    """
    levels = lw_levels(case.arena, case.L, case.W, case.edges, case.u)
    if levels is None:
        return True
    from_w = lw_levels(case.arena, case.L, case.W, case.edges, case.W)
    if from_w is None:
        return False
    peak = max(levels)
    if levels[-1] == peak and from_w[-1] != case.W:
        return False
    if levels[0] == peak and from_w[-1] != case.W + levels[-1] - levels[0]:
        return False
    return True


def check_cycle_excision(case: PathCase) -> bool:
    """
    Cutting a cycle along which the level did not rise keeps the path
    feasible and ends at least as high.
    """
    levels = lw_levels(case.arena, case.L, case.W, case.edges, case.u)
    if levels is None:
        return True
    states = case.states
    for i in range(len(states)):
        for j in range(i + 1, len(states)):
            if states[i] != states[j] or levels[j] > levels[i]:
                continue
            cut = case.edges[:i] + case.edges[j:]
            shorter = lw_levels(case.arena, case.L, case.W, cut, case.u)
            if shorter is None or shorter[-1] < levels[-1]:
                logger.debug(f"Excision counterexample: {case.edges} cut [{i}:{j}]")
                return False
    return True


def check_cycle_iteration(arena: Arena, L: int, W: int, cycle: Sequence[int], level: int) -> bool:
    """
    A cycle that does not lose energy from ``level`` and stays feasible,
    iterated W-L times, reaches a level that one more iteration keeps.
    """
    once = lw_levels(arena, L, W, cycle, level)
    if once is None or once[-1] < level:
        return True
    current = level
    for _ in range(W - L):
        current = lw_levels(arena, L, W, cycle, current)[-1]
    again = lw_levels(arena, L, W, cycle, current)
    return again is not None and again[-1] == current


def cycles_of(case: PathCase) -> List[tuple]:
    """Every cycle (edge slice returning to its first state) inside a case's path."""
    states = case.states
    found = []
    for i in range(len(states)):
        for j in range(i + 1, len(states)):
            if states[i] == states[j]:
                found.append(case.edges[i:j])
    return found

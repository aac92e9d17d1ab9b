"""
Strict run replayer: the ground truth every emitted run is checked against.
"""
import logging
from typing import List, Optional, Sequence

from ..exceptions import InfeasibleRunError
from ..models.arena import Arena
from ..models.constraint import ConstraintSpec
from ..models.run import Run
from ..models.types import Kind
from ..utils.checked_math import checked_add
from .expansion import counter_after

logger = logging.getLogger(__name__)


def next_level(spec: ConstraintSpec, level: int, weight: int) -> Optional[int]:
    """
    Level after one step under the constraint's semantics, None when the step
    breaks the constraint.
    """
    raw = checked_add(level, weight)
    if raw < spec.L:
        return None
    if spec.kind is Kind.LW:
        return min(spec.W, raw)
    if spec.kind in (Kind.LU, Kind.LV) and raw > spec.U:
        return None
    return raw


def replay_run(
    arena: Arena,
    spec: ConstraintSpec,
    edges: Sequence[int],
    start: Optional[str] = None,
    start_level: Optional[int] = None,
) -> Run:
    """
    Replay edge indices from (start, start_level) under strict semantics.

    Args:
        arena: Arena the edges index into
        spec: Constraint giving the semantics (L, LU, LW clamping, LV budget)
        edges: Edge indices, in order
        start: Start state (default: arena.initial)
        start_level: Start level (default: spec.L)

    Returns:
        The replayed Run

    Raises:
        InfeasibleRunError: If edges are not consecutive, a level leaves its
            bounds or the violation budget is exceeded
    """
    state = arena.initial if start is None else start
    level = spec.L if start_level is None else start_level
    counter = 0
    if spec.kind is Kind.LV:
        counter = counter_after(0, level, spec.S, spec.measure)
        if counter > spec.V:
            raise InfeasibleRunError(f"violation budget {spec.V} exceeded", 0)

    steps = [(state, level)]
    for position, idx in enumerate(edges, start=1):
        if idx < 0 or idx >= len(arena.edges):
            raise InfeasibleRunError(f"unknown edge index {idx}", position)
        edge = arena.edges[idx]
        if edge.src != state:
            raise InfeasibleRunError(
                f"edge {edge.src}->{edge.dst} does not leave '{state}'", position
            )
        new_level = next_level(spec, level, edge.weight)
        if new_level is None:
            raise InfeasibleRunError(
                f"level {level}{edge.weight:+d} leaves the {spec.kind.value} bounds", position
            )
        state, level = edge.dst, new_level
        if spec.kind is Kind.LV:
            counter = counter_after(counter, level, spec.S, spec.measure)
            if counter > spec.V:
                raise InfeasibleRunError(f"violation budget {spec.V} exceeded", position)
        steps.append((state, level))
    return Run(tuple(steps), tuple(edges))


def is_valid_run(arena: Arena, spec: ConstraintSpec, run: Run) -> bool:
    """True when the run's recorded steps match a strict replay of its edges."""
    try:
        replayed = replay_run(arena, spec, run.edges_taken, run.steps[0][0], run.steps[0][1])
    except InfeasibleRunError as e:
        logger.debug(f"Run rejected: {e}")
        return False
    return replayed.steps == run.steps


def edges_for_states(arena: Arena, states: Sequence[str]) -> List[int]:
    """
    Edge indices linking a state sequence (lowest index among parallel edges).

    Raises:
        InfeasibleRunError: If two consecutive states are not linked
    """
    edges = []
    for position, (src, dst) in enumerate(zip(states, states[1:]), start=1):
        if src not in arena.owner:
            raise InfeasibleRunError(f"unknown state '{src}'", position - 1)
        idx = next((i for i, d in arena.successors(src) if d == dst), None)
        if idx is None:
            raise InfeasibleRunError(f"no edge {src}->{dst}", position)
        edges.append(idx)
    return edges

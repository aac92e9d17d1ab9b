"""
Reductions between L-energy games and L-energy-reachability games.

The small perturbation of edge weights is kept integral: every weight is
multiplied by scale = |Q| + 1 and then shifted by one unit. A cycle has at
most |Q| edges, so the shifts never flip the sign of a non-zero cycle.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

from ..exceptions import ConfigurationError
from ..models.arena import Arena, Edge
from ..models.types import Player
from ..utils.checked_math import checked_add, checked_mul, checked_sum
from .game_engine import attractor_ranks

logger = logging.getLogger(__name__)


@dataclass
class ReductionOutput:
    """
    Reduced arena plus the constants used to build it.

    ``mapping`` sends each original state to the reduced states standing
    for it.
    """
    arena: Arena
    scale: int
    delta: Optional[int] = None
    mapping: Dict[str, Tuple[str, ...]] = field(default_factory=dict)

    def mapping_comments(self) -> List[str]:
        lines = [f"# scale {self.scale}"]
        if self.delta is not None:
            lines.append(f"# delta {self.delta}")
        for original, reduced in self.mapping.items():
            lines.append(f"# {original} -> {', '.join(reduced)}")
        return lines


def _fresh(name: str, taken: Set[str]) -> str:
    candidate = name
    suffix = 1
    while candidate in taken:
        candidate = f"{name}_{suffix}"
        suffix += 1
    taken.add(candidate)
    return candidate


def reduce_energy_to_reach(arena: Arena) -> ReductionOutput:
    """
    Build a reachability game won by P1 iff she wins the L-energy game.

    Every edge (q, w, q') becomes (q, scale*w + 1, c(q')), where the
    P1-owned copy c(q') either returns to q' with weight 0 or pays -delta
    to reach the fresh target; delta exceeds the sum of all positive
    scaled weights.

    Args:
        arena: Valid arena (targets are ignored)

    Returns:
        ReductionOutput with delta set
    """
    scale = len(arena.states) + 1
    taken = set(arena.states)
    copy_of = {q: _fresh(f"{q}_c", taken) for q in arena.states}
    target = _fresh("qt", taken)

    scaled = [checked_add(checked_mul(scale, e.weight), 1) for e in arena.edges]
    delta = checked_add(checked_sum(w for w in scaled if w > 0), 1)

    states = list(arena.states) + [copy_of[q] for q in arena.states] + [target]
    owner = dict(arena.owner)
    owner.update({copy_of[q]: Player.P1 for q in arena.states})
    owner[target] = Player.P1

    edges = [Edge(e.src, w, copy_of[e.dst]) for e, w in zip(arena.edges, scaled)]
    for q in arena.states:
        edges.append(Edge(copy_of[q], 0, q))
        edges.append(Edge(copy_of[q], -delta, target))
    edges.append(Edge(target, 0, target))

    reduced = Arena(tuple(states), owner, tuple(edges), arena.initial, frozenset([target]))
    mapping = {q: (q, copy_of[q]) for q in arena.states}
    logger.info(
        f"Energy->reach: {len(arena.states)} -> {len(states)} states, scale {scale}, delta {delta}"
    )
    return ReductionOutput(reduced, scale, delta, mapping)


def reduce_reach_to_energy(arena: Arena) -> ReductionOutput:
    """
    Build an L-energy game won by P1 iff she wins the L-energy-reachability
    game.

    The arena is restricted to P1's qualitative attractor of the targets
    (edges leaving it go to a losing sink with a -1 self-loop), targets keep
    only a zero self-loop, other weights become scale*w - 1, and a fresh P1
    initial state gives the initial credit with an edge of weight scale.

    Raises:
        ConfigurationError: If the arena has no targets
    """
    if not arena.targets:
        raise ConfigurationError("reachability objective needs at least one target")
    scale = len(arena.states) + 1
    rank = attractor_ranks(arena, arena.targets, Player.P1)
    kept = [q for q in arena.states if q in rank]

    taken = set(arena.states)
    sink = _fresh("sink", taken)
    start = _fresh("start", taken)
    sink_used = arena.initial not in rank

    edges: List[Edge] = []
    for q in kept:
        if q in arena.targets:
            edges.append(Edge(q, 0, q))
            continue
        for idx in arena.out_edges(q):
            e = arena.edges[idx]
            weight = checked_add(checked_mul(scale, e.weight), -1)
            if e.dst in rank:
                edges.append(Edge(q, weight, e.dst))
            else:
                edges.append(Edge(q, weight, sink))
                sink_used = True
    edges.append(Edge(start, scale, arena.initial if arena.initial in rank else sink))

    states = [start] + kept
    owner = {q: arena.owner[q] for q in kept}
    owner[start] = Player.P1
    if sink_used:
        states.append(sink)
        owner[sink] = Player.P1
        edges.append(Edge(sink, -1, sink))

    reduced = Arena(tuple(states), owner, tuple(edges), start, frozenset())
    mapping = {q: (q,) if q in rank else ((sink,) if sink_used else ()) for q in arena.states}
    logger.info(
        f"Reach->energy: kept {len(kept)}/{len(arena.states)} states, scale {scale}"
    )
    return ReductionOutput(reduced, scale, None, mapping)

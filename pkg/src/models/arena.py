"""
Arena data model: a finite weighted game graph whose states are split
between Player 1 and Player 2.
"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, List, Tuple

from .graph import GameGraph
from .types import Player
from ..constants import CONFIG_SEPARATOR
from ..exceptions import (
    ArenaParseError,
    DuplicateStateError,
    MissingOutgoingEdgeError,
    UnknownStateError,
)
from ..utils.checked_math import check_int64, checked_sum


@dataclass(frozen=True)
class Edge:
    """Weighted edge (src, weight, dst)"""
    src: str
    weight: int
    dst: str


@dataclass(frozen=True, eq=True)
class Arena(GameGraph):
    """
    Immutable two-player arena.

    State order is the canonical iteration order used by every solver, so
    two arenas built from the same text behave identically.
    """
    states: Tuple[str, ...]
    owner: Dict[str, Player] = field(hash=False)
    edges: Tuple[Edge, ...]
    initial: str
    targets: FrozenSet[str] = frozenset()

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        """
        Check every arena invariant.

        Raises:
            DuplicateStateError, UnknownStateError, MissingOutgoingEdgeError,
            ArenaParseError
        """
        seen = set()
        for state in self.states:
            if state in seen:
                raise DuplicateStateError(state)
            if not state or CONFIG_SEPARATOR in state or any(ch.isspace() for ch in state):
                raise ArenaParseError(f"invalid state name '{state}'")
            seen.add(state)

        for state in self.states:
            if state not in self.owner:
                raise ArenaParseError(f"state '{state}' has no owner")

        if self.initial not in seen:
            raise UnknownStateError(self.initial)
        for target in self.targets:
            if target not in seen:
                raise UnknownStateError(target)

        has_out = set()
        for edge in self.edges:
            if edge.src not in seen:
                raise UnknownStateError(edge.src)
            if edge.dst not in seen:
                raise UnknownStateError(edge.dst)
            check_int64(edge.weight, f"weight of edge {edge.src}->{edge.dst}")
            has_out.add(edge.src)

        for state in self.states:
            if state not in has_out:
                raise MissingOutgoingEdgeError(state)

    @cached_property
    def _out(self) -> Dict[str, List[int]]:
        out: Dict[str, List[int]] = {q: [] for q in self.states}
        for idx, edge in enumerate(self.edges):
            out[edge.src].append(idx)
        return out

    def out_edges(self, state: str) -> List[int]:
        """Indices of the edges leaving a state, in canonical order."""
        return self._out[state]

    def owner_of(self, state: str) -> Player:
        return self.owner[state]

    @property
    def nodes(self) -> Tuple[str, ...]:
        return self.states

    def successors(self, state: str) -> List[Tuple[int, str]]:
        """(edge index, destination) pairs, in canonical order."""
        return [(idx, self.edges[idx].dst) for idx in self._out[state]]

    @property
    def is_one_player(self) -> bool:
        return all(p is Player.P1 for p in self.owner.values())

    @property
    def p2_states(self) -> List[str]:
        return [q for q in self.states if self.owner[q] is Player.P2]

    def positive_weight_sum(self) -> int:
        return checked_sum(e.weight for e in self.edges if e.weight > 0)

    def negative_weight_sum(self) -> int:
        """Sum of negative-weight magnitudes (a nonnegative number)."""
        return checked_sum(-e.weight for e in self.edges if e.weight < 0)

    def fix_p2_choices(self, choice: Dict[str, int]) -> "Arena":
        """
        Keep only the chosen edge at every P2 state and hand those states
        to P1 (a state with a single edge leaves nothing to choose).

        Args:
            choice: P2 state -> index of the edge to keep
        """
        kept = tuple(
            edge
            for idx, edge in enumerate(self.edges)
            if self.owner[edge.src] is Player.P1 or choice[edge.src] == idx
        )
        owner = {q: Player.P1 for q in self.states}
        return Arena(self.states, owner, kept, self.initial, self.targets)


def max_pos_weight(arena: Arena) -> int:
    """
    Largest positive edge weight, or 0 when every weight is <= 0.

    Args:
        arena: Valid arena

    Returns:
        Nonnegative integer
    """
    return max((e.weight for e in arena.edges if e.weight > 0), default=0)

"""
Abstract game graph interface.

Both plain arenas and expanded configuration arenas are solved by the same
attractor/safety engine; this is the contract it relies on.
"""
from abc import ABC, abstractmethod
from typing import Hashable, List, Sequence, Tuple

from .types import Player


class GameGraph(ABC):
    """
    Read-only two-player game graph.

    Node order returned by ``nodes`` is the canonical iteration order and
    successor order is the tie-breaking order for strategy extraction.
    """

    @property
    @abstractmethod
    def nodes(self) -> Sequence[Hashable]:
        """All nodes, in canonical order."""
        pass

    @abstractmethod
    def owner_of(self, node) -> Player:
        """Player choosing the next edge at a node."""
        pass

    @abstractmethod
    def successors(self, node) -> List[Tuple[int, Hashable]]:
        """(edge index, destination) pairs, lowest edge index first."""
        pass

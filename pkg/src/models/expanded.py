"""
Expanded arenas: explicit configuration graphs over (state, level[, counter]).
"""
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Tuple

from .graph import GameGraph
from .types import Player
from ..constants import BOTTOM_NAME, CONFIG_SEPARATOR, ERR_NAME


class Configuration(NamedTuple):
    """
    One node of an expanded arena.

    ``state is None`` marks the error sink. ``tainted`` marks a (q, bot)
    configuration whose level/counter left its bounds; it has no level.
    """
    state: Optional[str]
    level: Optional[int]
    counter: Optional[int] = None
    tainted: bool = False

    @property
    def is_err(self) -> bool:
        return self.state is None

    @property
    def is_bad(self) -> bool:
        return self.state is None or self.tainted

    @property
    def name(self) -> str:
        if self.state is None:
            return ERR_NAME
        if self.tainted:
            return f"{self.state}{CONFIG_SEPARATOR}{BOTTOM_NAME}"
        parts = [self.state, str(self.level)]
        if self.counter is not None:
            parts.append(str(self.counter))
        return CONFIG_SEPARATOR.join(parts)


ERR = Configuration(None, None)


def tainted(state: str) -> Configuration:
    """Absorbing bad copy of a state."""
    return Configuration(state, None, None, True)


class ExpandedEdge(NamedTuple):
    """Edge of an expanded arena; ``arena_edge`` is None on sink self-loops"""
    src: Configuration
    weight: int
    dst: Configuration
    arena_edge: Optional[int]


class ExpandedArena(GameGraph):
    """
    Reachable fragment of an expanded arena.

    Every configuration has at least one outgoing edge; ERR and tainted
    configurations only lead to bad configurations.
    """

    def __init__(
        self,
        configs: List[Configuration],
        owner: Dict[Configuration, Player],
        edges: List[ExpandedEdge],
        init: Configuration,
        targets: Iterable[Configuration],
        bad: Iterable[Configuration],
        semantics: str = "",
    ):
        """
        Args:
            configs: Configurations in discovery order
            owner: Owner of every configuration
            edges: Expanded edges, grouped by source in discovery order
            init: Initial configuration
            targets: Target configurations (never bad)
            bad: ERR plus tainted configurations
            semantics: Short label such as "LU[0,6]" used in dumps
        """
        self.configs = configs
        self.owner = owner
        self.edges = edges
        self.init = init
        self.targets: FrozenSet[Configuration] = frozenset(targets)
        self.bad: FrozenSet[Configuration] = frozenset(bad)
        self.semantics = semantics
        self._out: Dict[Configuration, List[int]] = {c: [] for c in configs}
        for idx, edge in enumerate(edges):
            self._out[edge.src].append(idx)

    @property
    def nodes(self) -> List[Configuration]:
        return self.configs

    def owner_of(self, node: Configuration) -> Player:
        return self.owner[node]

    def successors(self, node: Configuration) -> List[Tuple[int, Configuration]]:
        return [(idx, self.edges[idx].dst) for idx in self._out[node]]

    def out_edges(self, node: Configuration) -> List[int]:
        return self._out[node]

    def __contains__(self, node) -> bool:
        return node in self._out

    def __len__(self) -> int:
        return len(self.configs)

"""
Generic two-player game solving on any GameGraph: attractors, safety and
shortest one-player witnesses.
"""
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Hashable, Iterable, List, Optional, Tuple

from ..models.expanded import ExpandedArena
from ..models.graph import GameGraph
from ..models.run import Run
from ..models.types import Objective, Player

logger = logging.getLogger(__name__)


@dataclass
class WinningRegion:
    """
    Winner per node plus a memoryless strategy (node -> edge index) for the
    winning player where one is needed.
    """
    winner: Dict[Hashable, Player]
    strategy: Dict[Hashable, int] = field(default_factory=dict)

    def wins(self, node, player: Player = Player.P1) -> bool:
        return self.winner[node] is player

    def region(self, player: Player = Player.P1) -> List[Hashable]:
        """Nodes won by ``player``, in insertion (canonical) order."""
        return [node for node, who in self.winner.items() if who is player]


def _predecessors(graph: GameGraph) -> Dict[Hashable, List[Tuple[Hashable, int]]]:
    preds: Dict[Hashable, List[Tuple[Hashable, int]]] = {node: [] for node in graph.nodes}
    for node in graph.nodes:
        for idx, dst in graph.successors(node):
            preds[dst].append((node, idx))
    return preds


def attractor_ranks(graph: GameGraph, targets: Iterable, player: Player) -> Dict[Hashable, int]:
    """
    Backward fixed point: nodes from which ``player`` forces a visit to
    ``targets``, with the number of steps needed.

    Linear in the number of edges. Targets have rank 0.
    """
    preds = _predecessors(graph)
    rank: Dict[Hashable, int] = {}
    queue = deque()
    for node in targets:
        if node in preds and node not in rank:
            rank[node] = 0
            queue.append(node)

    # opponent nodes join once every successor is in the attractor
    remaining = {
        node: len(graph.successors(node))
        for node in graph.nodes
        if graph.owner_of(node) is not player
    }

    while queue:
        node = queue.popleft()
        for pred, _ in preds[node]:
            if pred in rank:
                continue
            if graph.owner_of(pred) is player:
                rank[pred] = rank[node] + 1
                queue.append(pred)
            else:
                remaining[pred] -= 1
                if remaining[pred] == 0:
                    rank[pred] = rank[node] + 1
                    queue.append(pred)
    return rank


def attractor(graph: GameGraph, targets: Iterable, player: Player) -> WinningRegion:
    """
    Solve the reachability game for ``player``.

    Args:
        graph: Game graph, every node with an outgoing edge
        targets: Nodes to reach
        player: Player trying to reach them

    Returns:
        WinningRegion; the strategy maps every non-target node of ``player``
        inside the attractor to the lowest-index edge decreasing the rank
    """
    rank = attractor_ranks(graph, targets, player)
    winner: Dict[Hashable, Player] = {}
    strategy: Dict[Hashable, int] = {}
    for node in graph.nodes:
        if node in rank:
            winner[node] = player
            if rank[node] > 0 and graph.owner_of(node) is player:
                strategy[node] = next(
                    idx for idx, dst in graph.successors(node)
                    if dst in rank and rank[dst] < rank[node]
                )
        else:
            winner[node] = player.opponent
    logger.debug(f"Attractor for {player.label}: {len(rank)}/{len(winner)} nodes")
    return WinningRegion(winner, strategy)


def solve_safety(graph: GameGraph, avoid: Iterable, player: Player) -> WinningRegion:
    """
    Solve the safety game: ``player`` must never visit ``avoid``.

    The winning region is the complement of the opponent's attractor to
    ``avoid``; the strategy picks the lowest-index edge staying inside it.
    """
    opponent_rank = attractor_ranks(graph, avoid, player.opponent)
    winner: Dict[Hashable, Player] = {}
    strategy: Dict[Hashable, int] = {}
    for node in graph.nodes:
        if node in opponent_rank:
            winner[node] = player.opponent
        else:
            winner[node] = player
            if graph.owner_of(node) is player:
                strategy[node] = next(
                    idx for idx, dst in graph.successors(node) if dst not in opponent_rank
                )
    return WinningRegion(winner, strategy)


def solve_expanded(expanded: ExpandedArena, objective: Objective) -> WinningRegion:
    """
    Solve an expanded arena for P1: reach a non-bad target configuration
    (REACH) or avoid every bad configuration forever (INFINITE_RUN).
    """
    if objective is Objective.REACH:
        return attractor(expanded, expanded.targets, Player.P1)
    return solve_safety(expanded, expanded.bad, Player.P1)


def simulate(graph: GameGraph, region: WinningRegion, start, steps: int, opponent_choice=None) -> List:
    """
    Follow the memoryless strategy from ``start`` for ``steps`` moves.

    Nodes without a strategy entry (opponent nodes, targets) move along
    ``opponent_choice(node, successors)`` or, by default, the first edge.

    Returns:
        Visited nodes, ``start`` included
    """
    path = [start]
    node = start
    for _ in range(steps):
        succ = dict(graph.successors(node))
        if node in region.strategy:
            node = succ[region.strategy[node]]
        elif opponent_choice is not None:
            node = opponent_choice(node, graph.successors(node))
        else:
            node = graph.successors(node)[0][1]
        path.append(node)
    return path


def shortest_witness(expanded: ExpandedArena, targets: Optional[Iterable] = None) -> Optional[Run]:
    """
    Breadth-first shortest run from init to a target, avoiding bad configs.

    Args:
        expanded: One-player expanded arena
        targets: Target configurations (default: expanded.targets)

    Returns:
        The run over arena states and levels, or None when no target is
        reachable
    """
    goal = set(expanded.targets if targets is None else targets)
    init = expanded.init
    if init.is_bad:
        return None

    parent: Dict[Hashable, Tuple[Hashable, int]] = {init: None}
    queue = deque([init])
    found = init if init in goal else None
    while queue and found is None:
        config = queue.popleft()
        for idx, dst in expanded.successors(config):
            if dst.is_bad or dst in parent:
                continue
            parent[dst] = (config, idx)
            if dst in goal:
                found = dst
                break
            queue.append(dst)

    if found is None:
        logger.debug(f"No witness in {expanded.semantics}")
        return None

    steps = []
    edges_taken = []
    node = found
    while node is not None:
        steps.append((node.state, node.level))
        link = parent[node]
        if link is None:
            break
        node, idx = link
        edges_taken.append(expanded.edges[idx].arena_edge)
    steps.reverse()
    edges_taken.reverse()
    return Run(tuple(steps), tuple(edges_taken))

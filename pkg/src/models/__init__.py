"""Models package"""
from .types import Player, Kind, Measure, Objective
from .graph import GameGraph
from .arena import Arena, Edge, max_pos_weight
from .constraint import ConstraintSpec
from .run import Run
from .expanded import Configuration, ExpandedArena, ExpandedEdge, ERR, tainted

__all__ = [
    "Player",
    "Kind",
    "Measure",
    "Objective",
    "GameGraph",
    "Arena",
    "Edge",
    "max_pos_weight",
    "ConstraintSpec",
    "Run",
    "Configuration",
    "ExpandedArena",
    "ExpandedEdge",
    "ERR",
    "tainted",
]

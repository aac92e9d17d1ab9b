"""
Type definitions for the energy arena solvers.
"""
from enum import Enum
from typing import Dict, Any, List, Optional, TypedDict


class Player(Enum):
    """Owner of a state / winner of a node"""
    P1 = 1
    P2 = 2

    @property
    def opponent(self) -> "Player":
        return Player.P2 if self is Player.P1 else Player.P1

    @property
    def label(self) -> str:
        return self.name


class Kind(Enum):
    """Energy semantics"""
    L = "L"
    LU = "LU"
    LW = "LW"
    LV = "LV"


class Measure(Enum):
    """Violation measure for soft upper bounds"""
    COUNT = "count"
    CONSECUTIVE = "cons"
    SUM = "sum"


class Objective(Enum):
    """Winning condition on top of the energy constraint"""
    INFINITE_RUN = "inf"
    REACH = "reach"


class ConstraintEcho(TypedDict, total=False):
    """Query echo as it appears in reports"""
    kind: str
    L: int
    U: Optional[int]
    W: Optional[int]
    S: Optional[int]
    V: Optional[int]
    measure: Optional[str]
    objective: str


class SolveStats(TypedDict, total=False):
    """Solver statistics"""
    configs_explored: int
    labels_stored: int
    wall_time_ms: float


class WitnessPayload(TypedDict, total=False):
    """Compact + optional expanded witness"""
    segments: List[Dict[str, Any]]
    length: int
    trace: Optional[List[Dict[str, Any]]]


class SolveReport(TypedDict):
    """Report for the solve command"""
    query: ConstraintEcho
    solver: str
    winner: str
    witness: Optional[WitnessPayload]
    stats: SolveStats


class MinimizeReport(TypedDict):
    """Report for the minimize command"""
    bestV: Optional[int]
    bestU: Optional[int]
    winner: str
    witnessLength: Optional[int]


class TraceRow(TypedDict):
    """One CSV row of a run trace"""
    index: int
    state: str
    level: int
    violating: Optional[bool]

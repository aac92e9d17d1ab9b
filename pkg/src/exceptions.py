"""
Custom exceptions for the energy arena solvers.
"""
from typing import Optional


class EnergyArenaError(Exception):
    """Base exception for all energy arena errors"""
    pass


class ArenaParseError(EnergyArenaError):
    """Raised when arena text does not follow the arena grammar"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MissingOutgoingEdgeError(ArenaParseError):
    """Raised when a state has no outgoing edge"""

    def __init__(self, state: str):
        self.state = state
        super().__init__(f"state '{state}' has no outgoing edge")


class UnknownStateError(ArenaParseError):
    """Raised when an edge or marker refers to an undeclared state"""

    def __init__(self, state: str, line: Optional[int] = None):
        self.state = state
        super().__init__(f"unknown state '{state}'", line)


class DuplicateStateError(ArenaParseError):
    """Raised when a state name is declared twice"""

    def __init__(self, state: str, line: Optional[int] = None):
        self.state = state
        super().__init__(f"duplicate state '{state}'", line)


class NoInitialStateError(ArenaParseError):
    """Raised when no state carries the init marker"""

    def __init__(self):
        super().__init__("no initial state declared")


class BoundsError(EnergyArenaError):
    """Raised when energy bounds are inconsistent (e.g. L > U)"""
    pass


class ArithmeticOverflowError(EnergyArenaError):
    """Raised when solver arithmetic leaves the signed 64-bit range"""
    pass


class BlowUpGuardError(EnergyArenaError):
    """Raised when an instance exceeds a hard size guard"""
    pass


class LabelBoundError(EnergyArenaError):
    """Raised when a label DAG node holds more labels than its depth allows"""
    pass


class InfeasibleRunError(EnergyArenaError):
    """Raised when a replayed run breaks its energy semantics"""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"position {position}: {message}"
        super().__init__(message)


class NoWitnessError(EnergyArenaError):
    """Raised when a witness run is requested but none exists"""
    pass


class ConfigurationError(EnergyArenaError):
    """Raised when configuration or query flags are invalid"""
    pass

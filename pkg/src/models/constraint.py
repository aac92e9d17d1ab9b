"""
Constraint specification: which energy semantics applies, with its bounds.
"""
from dataclasses import dataclass
from typing import Optional

from .arena import Arena
from .types import ConstraintEcho, Kind, Measure, Objective
from ..exceptions import BoundsError, ConfigurationError


@dataclass(frozen=True)
class ConstraintSpec:
    """
    Energy constraint plus objective.

    kind=LU needs U; kind=LW needs W; kind=LV needs S, U, V and a measure,
    with L <= S <= U.
    """
    kind: Kind
    L: int
    objective: Objective = Objective.REACH
    U: Optional[int] = None
    W: Optional[int] = None
    S: Optional[int] = None
    V: Optional[int] = None
    measure: Optional[Measure] = None

    def __post_init__(self):
        self.validate()

    def validate(self, arena: Optional[Arena] = None) -> None:
        """
        Check the bound invariants (and, given an arena, the objective).

        Raises:
            ConfigurationError: If a required bound is missing
            BoundsError: If bounds are out of order
        """
        if self.kind is Kind.LU:
            if self.U is None:
                raise ConfigurationError("kind LU requires U")
            if self.L > self.U:
                raise BoundsError(f"L={self.L} > U={self.U}")
        elif self.kind is Kind.LW:
            if self.W is None:
                raise ConfigurationError("kind LW requires W")
            if self.L > self.W:
                raise BoundsError(f"L={self.L} > W={self.W}")
        elif self.kind is Kind.LV:
            missing = [
                name for name, value in
                (("S", self.S), ("U", self.U), ("V", self.V), ("measure", self.measure))
                if value is None
            ]
            if missing:
                raise ConfigurationError(f"kind LV requires {', '.join(missing)}")
            if not (self.L <= self.S <= self.U):
                raise BoundsError(f"expected L <= S <= U, got {self.L}, {self.S}, {self.U}")
            if self.V < 0:
                raise BoundsError(f"V must be nonnegative, got {self.V}")

        if arena is not None and self.objective is Objective.REACH and not arena.targets:
            raise ConfigurationError("reachability objective needs at least one target")

    @property
    def upper(self) -> Optional[int]:
        """Level ceiling: U for LU/LV, W for LW, None for L."""
        if self.kind is Kind.LW:
            return self.W
        if self.kind in (Kind.LU, Kind.LV):
            return self.U
        return None

    def echo(self) -> ConstraintEcho:
        """Field-ordered echo for reports."""
        return {
            "kind": self.kind.value,
            "L": self.L,
            "U": self.U,
            "W": self.W,
            "S": self.S,
            "V": self.V,
            "measure": self.measure.value if self.measure else None,
            "objective": self.objective.value,
        }

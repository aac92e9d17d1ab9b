"""
Concrete runs through an arena.
"""
from dataclasses import dataclass
from typing import List, Tuple


@dataclass(frozen=True)
class Run:
    """
    A finite run: positions (state, level) linked by arena edge indices.

    ``len(steps) == len(edges_taken) + 1``; the first step is the start
    configuration.
    """
    steps: Tuple[Tuple[str, int], ...]
    edges_taken: Tuple[int, ...]

    def __post_init__(self):
        if len(self.steps) != len(self.edges_taken) + 1:
            raise ValueError(
                f"run with {len(self.edges_taken)} edges needs "
                f"{len(self.edges_taken) + 1} steps, got {len(self.steps)}"
            )

    @property
    def states(self) -> List[str]:
        return [state for state, _ in self.steps]

    @property
    def levels(self) -> List[int]:
        return [level for _, level in self.steps]

    @property
    def last(self) -> Tuple[str, int]:
        return self.steps[-1]

    def __len__(self) -> int:
        """Number of edges taken."""
        return len(self.edges_taken)

"""
Seeded random arena generator.
"""
import logging
import random
from dataclasses import asdict, dataclass, fields, replace
from typing import Any, Dict, Tuple

from ..constants import (
    DEFAULT_EDGE_DENSITY,
    DEFAULT_GEN_STATES,
    DEFAULT_P2_FRACTION,
    DEFAULT_SEED,
    DEFAULT_TARGET_COUNT,
    DEFAULT_WEIGHT_RANGE,
)
from ..exceptions import ConfigurationError
from ..models.arena import Arena, Edge
from ..models.types import Player

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GenParams:
    """Random arena parameters; the arena is a pure function of them"""
    seed: int = DEFAULT_SEED
    n_states: int = DEFAULT_GEN_STATES
    p2_fraction: float = DEFAULT_P2_FRACTION
    weight_range: Tuple[int, int] = DEFAULT_WEIGHT_RANGE
    edge_density: float = DEFAULT_EDGE_DENSITY
    target_count: int = DEFAULT_TARGET_COUNT

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        if self.n_states < 1:
            raise ConfigurationError(f"n_states must be positive, got {self.n_states}")
        if not 0.0 <= self.p2_fraction <= 1.0:
            raise ConfigurationError(f"p2_fraction must be in [0, 1], got {self.p2_fraction}")
        low, high = self.weight_range
        if low > high:
            raise ConfigurationError(f"empty weight range {self.weight_range}")
        if not 0.0 <= self.edge_density <= 1.0:
            raise ConfigurationError(f"edge_density must be in [0, 1], got {self.edge_density}")
        if not 0 <= self.target_count <= self.n_states:
            raise ConfigurationError(
                f"target_count must be in [0, {self.n_states}], got {self.target_count}"
            )

    def with_seed(self, seed: int) -> "GenParams":
        return replace(self, seed=seed)

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["weight_range"] = list(self.weight_range)
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "GenParams":
        """
        Build from a dict such as a ``--params`` file.

        Raises:
            ConfigurationError: On unknown keys or invalid values
        """
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ConfigurationError(f"unknown generator parameters: {sorted(unknown)}")
        values = dict(data)
        if "weight_range" in values:
            values["weight_range"] = tuple(values["weight_range"])
        return cls(**values)


def random_arena(params: GenParams) -> Arena:
    """
    Draw an arena: states q0..q{n-1}, q0 initial, each ordered pair (src,
    dst) linked with probability edge_density; states left without an
    outgoing edge get one to a random state.

    Args:
        params: Generator parameters

    Returns:
        A valid Arena, identical for identical params
    """
    rng = random.Random(params.seed)
    low, high = params.weight_range
    states = tuple(f"q{i}" for i in range(params.n_states))
    owner = {
        q: Player.P2 if rng.random() < params.p2_fraction else Player.P1 for q in states
    }

    edges = []
    for src in states:
        for dst in states:
            if rng.random() < params.edge_density:
                edges.append(Edge(src, rng.randint(low, high), dst))

    # repair pass: every state needs an outgoing edge
    has_out = {e.src for e in edges}
    for src in states:
        if src not in has_out:
            edges.append(Edge(src, rng.randint(low, high), rng.choice(states)))

    targets = frozenset(rng.sample(states, params.target_count))
    arena = Arena(states, owner, tuple(edges), states[0], targets)
    logger.debug(f"Generated arena seed={params.seed}: {len(states)} states, {len(edges)} edges")
    return arena

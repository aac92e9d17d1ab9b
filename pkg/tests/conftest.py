"""Shared fixtures: the worked-example arenas and a seeded arena factory."""
from pathlib import Path

import pytest

from src.config import Config
from src.harness.generator import GenParams, random_arena
from src.models.arena import Arena, Edge
from src.models.types import Player
from src.services.arena_io import load_arena

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def overshoot() -> Arena:
    return load_arena(DATA_DIR / "overshoot.arena")


@pytest.fixture
def pump() -> Arena:
    return load_arena(DATA_DIR / "pump.arena")


@pytest.fixture
def two_cycles() -> Arena:
    return load_arena(DATA_DIR / "two_cycles.arena")


@pytest.fixture
def two_player() -> Arena:
    return load_arena(DATA_DIR / "two_player.arena")


def build_ladder(W: int, k: int) -> Arena:
    """
    Arena whose shortest LW[0, W] run to qt climbs one unit per gadget.

    Gadget c_i (three edges -i, +W, -W+i+1) lifts any level >= i to i+1;
    odd gadgets hang off s, even ones off sp, and s and sp are joined both
    ways by k zero-weight edges. qt is reached from sp at level W.
    """
    states = ["q0", "s", "sp"]
    edges = [Edge("q0", 1, "s")]
    for i in range(W):
        base = "s" if i % 2 else "sp"
        a, b = f"c{i}a", f"c{i}b"
        states += [a, b]
        edges += [Edge(base, -i, a), Edge(a, W, b), Edge(b, -W + i + 1, base)]
    for src, dst, prefix in (("s", "sp", "ts"), ("sp", "s", "tp")):
        hops = [src] + [f"{prefix}{j}" for j in range(1, k)] + [dst]
        states += hops[1:-1]
        edges += [Edge(u, 0, v) for u, v in zip(hops, hops[1:])]
    states.append("qt")
    edges += [Edge("sp", -W, "qt"), Edge("qt", 0, "qt")]
    owner = {q: Player.P1 for q in states}
    return Arena(tuple(states), owner, tuple(edges), "q0", frozenset(["qt"]))


@pytest.fixture
def ladder():
    return build_ladder


@pytest.fixture
def seeded_arena():
    """Factory: seeded random arena with keyword overrides of GenParams."""
    def make(seed: int, **overrides) -> Arena:
        return random_arena(GenParams(seed=seed, **overrides))
    return make


@pytest.fixture(autouse=True)
def reproducer_dir(tmp_path, monkeypatch) -> Path:
    """Keep cross-check reproducers out of the working tree."""
    target = tmp_path / "reproducers"
    monkeypatch.setattr(Config, "REPRODUCER_DIR", target)
    return target

"""
Arena text/JSON reading and writing.

Text format, one declaration per line, ``#`` starts a comment:

    state <name> owner=<1|2> [init] [target]
    edge <src> <weight> <dst>
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from ..models.arena import Arena, Edge
from ..models.expanded import ExpandedArena
from ..models.types import Player
from ..exceptions import (
    ArenaParseError,
    DuplicateStateError,
    NoInitialStateError,
    UnknownStateError,
)

logger = logging.getLogger(__name__)

_OWNERS = {"1": Player.P1, "2": Player.P2}


def parse_arena(text: str) -> Arena:
    """
    Parse an arena from its text form.

    Args:
        text: Arena text

    Returns:
        Validated Arena

    Raises:
        ArenaParseError: On syntax errors (with line number)
        DuplicateStateError, UnknownStateError: On bad state references
        NoInitialStateError: If no state is marked init
        MissingOutgoingEdgeError: If a state has no outgoing edge
    """
    states: List[str] = []
    owner: Dict[str, Player] = {}
    initial: Optional[str] = None
    targets = set()
    raw_edges: List[Tuple[int, str, int, str]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        keyword = tokens[0]

        if keyword == "state":
            if len(tokens) < 3:
                raise ArenaParseError("expected 'state <name> owner=<1|2> [init] [target]'", lineno)
            name = tokens[1]
            if name in owner:
                raise DuplicateStateError(name, lineno)
            player = None
            for token in tokens[2:]:
                if token.startswith("owner="):
                    player = _OWNERS.get(token[len("owner="):])
                    if player is None:
                        raise ArenaParseError(f"owner must be 1 or 2, got '{token}'", lineno)
                elif token == "init":
                    if initial is not None and initial != name:
                        raise ArenaParseError(
                            f"second initial state '{name}' (already '{initial}')", lineno
                        )
                    initial = name
                elif token == "target":
                    targets.add(name)
                else:
                    raise ArenaParseError(f"unexpected token '{token}'", lineno)
            if player is None:
                raise ArenaParseError(f"state '{name}' has no owner", lineno)
            states.append(name)
            owner[name] = player

        elif keyword == "edge":
            if len(tokens) != 4:
                raise ArenaParseError("expected 'edge <src> <weight> <dst>'", lineno)
            try:
                weight = int(tokens[2])
            except ValueError:
                raise ArenaParseError(f"weight '{tokens[2]}' is not an integer", lineno)
            raw_edges.append((lineno, tokens[1], weight, tokens[3]))

        else:
            raise ArenaParseError(f"unknown declaration '{keyword}'", lineno)

    for lineno, src, _, dst in raw_edges:
        for endpoint in (src, dst):
            if endpoint not in owner:
                raise UnknownStateError(endpoint, lineno)

    if initial is None:
        raise NoInitialStateError()

    edges = tuple(Edge(src, weight, dst) for _, src, weight, dst in raw_edges)
    arena = Arena(tuple(states), owner, edges, initial, frozenset(targets))
    logger.debug(f"Parsed arena: {len(states)} states, {len(edges)} edges")
    return arena


def serialize_arena(arena: Arena) -> str:
    """
    Render an arena in the text format.

    parse_arena(serialize_arena(a)) == a for every valid arena.
    """
    lines = []
    for state in arena.states:
        parts = ["state", state, f"owner={arena.owner[state].value}"]
        if state == arena.initial:
            parts.append("init")
        if state in arena.targets:
            parts.append("target")
        lines.append(" ".join(parts))
    for edge in arena.edges:
        lines.append(f"edge {edge.src} {edge.weight} {edge.dst}")
    return "\n".join(lines) + "\n"


def arena_to_json(arena: Arena) -> Dict[str, Any]:
    """JSON-ready dict with the same fields as the text format."""
    return {
        "states": [
            {
                "name": state,
                "owner": arena.owner[state].value,
                "init": state == arena.initial,
                "target": state in arena.targets,
            }
            for state in arena.states
        ],
        "edges": [
            {"src": e.src, "weight": e.weight, "dst": e.dst} for e in arena.edges
        ],
    }


def arena_from_json(data: Dict[str, Any]) -> Arena:
    """
    Build an arena from its JSON form.

    Raises:
        ArenaParseError: If required fields are missing or malformed
    """
    try:
        states: List[str] = []
        owner: Dict[str, Player] = {}
        initial = None
        targets = set()
        for entry in data["states"]:
            name = entry["name"]
            if name in owner:
                raise DuplicateStateError(name)
            player = _OWNERS.get(str(entry["owner"]))
            if player is None:
                raise ArenaParseError(f"owner must be 1 or 2 for state '{name}'")
            states.append(name)
            owner[name] = player
            if entry.get("init"):
                if initial is not None:
                    raise ArenaParseError(f"second initial state '{name}' (already '{initial}')")
                initial = name
            if entry.get("target"):
                targets.add(name)
        edges = []
        for entry in data["edges"]:
            if not isinstance(entry["weight"], int) or isinstance(entry["weight"], bool):
                raise ArenaParseError(f"weight {entry['weight']!r} is not an integer")
            edges.append(Edge(entry["src"], entry["weight"], entry["dst"]))
    except (KeyError, TypeError) as e:
        raise ArenaParseError(f"malformed arena JSON: {e}")

    if initial is None:
        raise NoInitialStateError()
    return Arena(tuple(states), owner, tuple(edges), initial, frozenset(targets))


def load_arena(path) -> Arena:
    """
    Load an arena file; ``.json`` files use the JSON form.

    Raises:
        OSError: If the file cannot be read
        ArenaParseError: If the content is invalid
    """
    path = Path(path)
    with open(path, "r", encoding="utf-8") as f:
        content = f.read()
    if path.suffix.lower() == ".json":
        try:
            data = json.loads(content)
        except json.JSONDecodeError as e:
            raise ArenaParseError(f"invalid JSON: {e.msg}", e.lineno)
        arena = arena_from_json(data)
    else:
        arena = parse_arena(content)
    logger.info(f"Loaded arena from {path}: {len(arena.states)} states, {len(arena.edges)} edges")
    return arena


def serialize_expanded(expanded: ExpandedArena) -> str:
    """
    Render an expanded arena in the text format, naming configurations
    ``state@level[@counter]``, ``state@bot`` and ``err``.
    """
    lines = [
        f"# expanded {expanded.semantics}: {len(expanded.configs)} configs, "
        f"{len(expanded.edges)} edges"
    ]
    for config in expanded.configs:
        parts = ["state", config.name, f"owner={expanded.owner[config].value}"]
        if config == expanded.init:
            parts.append("init")
        if config in expanded.targets:
            parts.append("target")
        lines.append(" ".join(parts))
    for edge in expanded.edges:
        lines.append(f"edge {edge.src.name} {edge.weight} {edge.dst.name}")
    return "\n".join(lines) + "\n"

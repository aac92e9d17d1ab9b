"""
Utility functions for storing cross-check reproducers locally.
"""
import logging
import json
from pathlib import Path
from typing import Dict, Any, Optional

from ..config import Config

logger = logging.getLogger(__name__)


def ensure_reproducer_dir(base: Optional[Path] = None) -> Path:
    """
    Ensure the reproducer directory exists.

    Args:
        base: Directory override (default: Config.REPRODUCER_DIR)

    Returns:
        Path to the reproducer directory
    """
    reproducer_dir = Path(base) if base is not None else Config.REPRODUCER_DIR
    reproducer_dir.mkdir(parents=True, exist_ok=True)
    return reproducer_dir


def save_reproducer(
    pair: str,
    seed: int,
    payload: Dict[str, Any],
    base: Optional[Path] = None,
) -> Optional[str]:
    """
    Save a diverging cross-check instance.
    Organizes by pairing name, one file per seed.

    Args:
        pair: Pairing name such as "lwpoly:exglw"
        seed: Generator seed of the instance
        payload: Arena text, parameters and both verdicts
        base: Directory override

    Returns:
        Path to saved file if successful, None otherwise
    """
    try:
        reproducer_dir = ensure_reproducer_dir(base)

        pair_dir = reproducer_dir / pair.replace(":", "_")
        pair_dir.mkdir(parents=True, exist_ok=True)

        filepath = pair_dir / f"seed_{seed}.json"
        with open(filepath, "w", encoding="utf-8") as f:
            json.dump(payload, f, indent=2, ensure_ascii=False)

        logger.info(f"Saved reproducer to: {filepath}")
        _append_index(reproducer_dir, pair, seed, filepath)
        return str(filepath)
    except OSError as e:
        logger.error(f"Failed to save reproducer for {pair} seed {seed}: {e}")
        return None


def _append_index(reproducer_dir: Path, pair: str, seed: int, filepath: Path) -> None:
    # JSON Lines: one divergence per line
    entry = {"pair": pair, "seed": seed, "file": str(filepath)}
    with open(reproducer_dir / "divergences.jsonl", "a", encoding="utf-8") as f:
        f.write(json.dumps(entry, ensure_ascii=False) + "\n")


def load_reproducer(path: Path) -> Dict[str, Any]:
    """Read a reproducer file back."""
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)

"""
Configuration management for the energy arena solvers.
Loads settings from environment variables.
"""
import os
from pathlib import Path
from dotenv import load_dotenv

from .constants import (
    DEFAULT_SEED,
    DEFAULT_P2_ENUMERATION_LIMIT,
    DEFAULT_MAX_EXPANDED_CONFIGS,
)
from .exceptions import ConfigurationError

# Load environment variables from .env file
env_path = Path(__file__).parent.parent / ".env"
load_dotenv(env_path)


class Config:
    """Application configuration"""

    # Paths
    BASE_DIR: Path = Path(__file__).parent.parent
    REPRODUCER_DIR: Path = Path(
        os.getenv("ENARENA_REPRODUCER_DIR", str(BASE_DIR / "reproducers"))
    )

    # Logging
    LOG_LEVEL: str = os.getenv("ENARENA_LOG_LEVEL", "WARNING").upper()

    # Generator
    DEFAULT_SEED: int = int(os.getenv("ENARENA_SEED", str(DEFAULT_SEED)))

    # Size guards
    P2_ENUMERATION_LIMIT: int = int(
        os.getenv("ENARENA_P2_LIMIT", str(DEFAULT_P2_ENUMERATION_LIMIT))
    )
    MAX_EXPANDED_CONFIGS: int = int(
        os.getenv("ENARENA_MAX_CONFIGS", str(DEFAULT_MAX_EXPANDED_CONFIGS))
    )

    @classmethod
    def validate(cls) -> bool:
        """Validate configuration"""
        if cls.LOG_LEVEL not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ConfigurationError(f"Unknown log level: {cls.LOG_LEVEL}")

        if cls.P2_ENUMERATION_LIMIT <= 0:
            raise ConfigurationError(
                f"ENARENA_P2_LIMIT must be positive, got {cls.P2_ENUMERATION_LIMIT}"
            )

        if cls.MAX_EXPANDED_CONFIGS <= 0:
            raise ConfigurationError(
                f"ENARENA_MAX_CONFIGS must be positive, got {cls.MAX_EXPANDED_CONFIGS}"
            )

        return True

"""
Application constants for the energy arena solvers.
"""

# Signed 64-bit range for weights and levels
INT64_MIN = -(2 ** 63)
INT64_MAX = 2 ** 63 - 1

# Expanded arena naming
ERR_NAME = "err"
BOTTOM_NAME = "bot"
CONFIG_SEPARATOR = "@"

# Memoryless P2 enumeration guard (product of P2 out-degrees)
DEFAULT_P2_ENUMERATION_LIMIT = 10_000

# Expanded arena size guard
DEFAULT_MAX_EXPANDED_CONFIGS = 2_000_000

# Random arena defaults
DEFAULT_SEED = 1
DEFAULT_GEN_STATES = 5
DEFAULT_WEIGHT_RANGE = (-4, 4)
DEFAULT_EDGE_DENSITY = 0.35
DEFAULT_P2_FRACTION = 0.0
MIXED_P2_FRACTION = 0.4
DEFAULT_TARGET_COUNT = 1

# Crosscheck defaults
DEFAULT_CROSSCHECK_SEEDS = 200
MAX_BOUND_SPAN = 6

# CLI exit codes
EXIT_P1_WINS = 0
EXIT_ERROR = 1
EXIT_P1_LOSES = 2

# Report labels
WINNER_P1 = "P1"
WINNER_P2 = "P2"

"""
Overflow-checked integer arithmetic.

Weights and energy levels are signed 64-bit integers. Python integers never
wrap, so every operation here checks the result against the int64 range and
aborts instead of silently producing values a 64-bit solver could not hold.
"""
from ..constants import INT64_MIN, INT64_MAX
from ..exceptions import ArithmeticOverflowError


def check_int64(value: int, what: str = "value") -> int:
    """
    Ensure a value fits the signed 64-bit range.

    Args:
        value: Integer to check
        what: Label used in the diagnostic

    Returns:
        The value unchanged

    Raises:
        ArithmeticOverflowError: If the value is out of range
    """
    if value < INT64_MIN or value > INT64_MAX:
        raise ArithmeticOverflowError(f"{what} {value} overflows signed 64-bit range")
    return value


def checked_add(a: int, b: int) -> int:
    """Add two int64 values, raising on overflow."""
    return check_int64(a + b, f"{a} + {b} =")


def checked_mul(a: int, b: int) -> int:
    """Multiply two int64 values, raising on overflow."""
    return check_int64(a * b, f"{a} * {b} =")


def checked_sum(values) -> int:
    """Sum an iterable of int64 values, checking every partial sum."""
    total = 0
    for value in values:
        total = checked_add(total, value)
    return total

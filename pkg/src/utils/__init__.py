"""Utilities package"""
from .checked_math import check_int64, checked_add, checked_mul, checked_sum
from .results_storage import save_reproducer, load_reproducer

__all__ = [
    "check_int64",
    "checked_add",
    "checked_mul",
    "checked_sum",
    "save_reproducer",
    "load_reproducer",
]

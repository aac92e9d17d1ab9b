"""
Energy Arena - solvers for energy games with lower, upper, weak and soft bounds
"""

__version__ = "1.0.0"

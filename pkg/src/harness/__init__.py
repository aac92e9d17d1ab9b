"""Verification harness: random arenas, brute-force oracles, property checks"""
from .generator import GenParams, random_arena
from .oracles import bounded_run_oracle, enumerate_p2_memoryless, oracle_solve
from .crosscheck import PAIRINGS, CrosscheckReport, run_crosscheck

__all__ = [
    "GenParams",
    "random_arena",
    "bounded_run_oracle",
    "enumerate_p2_memoryless",
    "oracle_solve",
    "PAIRINGS",
    "CrosscheckReport",
    "run_crosscheck",
]

"""Exact search and the greedy/repair heuristic"""

from .exact_solver import (
    ExactSolver,
    SearchBudgetExhausted,
    acyclic_chromatic_index,
    check_no_valid_extension,
    decide_colorable,
    is_deletion_minimal,
    iter_acyclic_colorings,
    sample_acyclic_coloring,
)
from .heuristic_colorer import color_with_restarts, greedy_color, local_repair

__all__ = [
    "ExactSolver",
    "SearchBudgetExhausted",
    "acyclic_chromatic_index",
    "check_no_valid_extension",
    "decide_colorable",
    "is_deletion_minimal",
    "iter_acyclic_colorings",
    "sample_acyclic_coloring",
    "color_with_restarts",
    "greedy_color",
    "local_repair",
]

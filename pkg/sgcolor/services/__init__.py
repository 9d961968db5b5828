"""
Services for sgcolor
"""
from .runner import ExperimentRunner, get_runner, run_experiment
from .solver import chi_b_exact, chi_exact, validate_coloring
from .switching import is_balanced, switch

__all__ = [
    "ExperimentRunner",
    "get_runner",
    "run_experiment",
    "chi_b_exact",
    "chi_exact",
    "validate_coloring",
    "is_balanced",
    "switch",
]

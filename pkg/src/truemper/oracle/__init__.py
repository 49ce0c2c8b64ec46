"""Slow, independently coded ground truth for K_{2,3} induced-minor containment."""

from .configs import CONFIG_KINDS, find_config_exhaustive
from .minor import InducedMinorModel, find_k23_model, is_valid_model, model_problems
from .separators import (
    MinimalSeparator,
    brute_force_minimal_separators,
    enumerate_minimal_separators,
    has_clique_cutset,
    k23_free_by_separators,
    violating_separator,
)

__all__ = [
    "CONFIG_KINDS",
    "InducedMinorModel",
    "MinimalSeparator",
    "brute_force_minimal_separators",
    "enumerate_minimal_separators",
    "find_config_exhaustive",
    "find_k23_model",
    "has_clique_cutset",
    "is_valid_model",
    "k23_free_by_separators",
    "model_problems",
    "violating_separator",
]

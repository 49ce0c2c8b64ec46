"""Recognition of graphs with no K_{2,3} induced minor via Truemper configurations."""

from .detectors import (
    DetectionResult,
    PreconditionViolation,
    detect_broken_wheel,
    detect_k23_induced_minor,
    detect_long_prism,
    detect_pyramid,
    detect_theta,
    extract_stm,
    witness_to_model,
)
from .graph import (
    Graph,
    components,
    independence_exceeds,
    is_chordless_path,
    is_hole,
    shortest_path_avoiding,
)
from .oracle import (
    InducedMinorModel,
    enumerate_minimal_separators,
    find_config_exhaustive,
    find_k23_model,
    has_clique_cutset,
    k23_free_by_separators,
)
from .patterns import ConfigSpec, make_config, make_gk, make_named, plant, random_chordal, random_graph
from .witness import BrokenWheel, Frame, Prism, Pyramid, Theta, is_broken_wheel, validate_witness

__version__ = "0.1.0"

__all__ = [
    "BrokenWheel",
    "ConfigSpec",
    "DetectionResult",
    "Frame",
    "Graph",
    "InducedMinorModel",
    "PreconditionViolation",
    "Prism",
    "Pyramid",
    "Theta",
    "components",
    "detect_broken_wheel",
    "detect_k23_induced_minor",
    "detect_long_prism",
    "detect_pyramid",
    "detect_theta",
    "enumerate_minimal_separators",
    "extract_stm",
    "find_config_exhaustive",
    "find_k23_model",
    "has_clique_cutset",
    "independence_exceeds",
    "is_broken_wheel",
    "is_chordless_path",
    "is_hole",
    "k23_free_by_separators",
    "make_config",
    "make_gk",
    "make_named",
    "plant",
    "random_chordal",
    "random_graph",
    "shortest_path_avoiding",
    "validate_witness",
    "witness_to_model",
]

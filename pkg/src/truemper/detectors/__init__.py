"""Detectors for the four Truemper configurations and the full K_{2,3} pipeline."""

from .broken_wheel import detect_broken_wheel, enumerate_frames, small_broken_wheel
from .long_prism import PreconditionViolation, detect_long_prism
from .pipeline import (
    STAGES,
    DetectionResult,
    detect_k23_induced_minor,
    detect_pyramid,
    detect_theta,
    witness_to_model,
)
from .stm import STMGraph, STMPreconditionError, extract_stm, stm_problems

__all__ = [
    "STAGES",
    "DetectionResult",
    "PreconditionViolation",
    "STMGraph",
    "STMPreconditionError",
    "detect_broken_wheel",
    "detect_k23_induced_minor",
    "detect_long_prism",
    "detect_pyramid",
    "detect_theta",
    "enumerate_frames",
    "extract_stm",
    "small_broken_wheel",
    "stm_problems",
    "witness_to_model",
]

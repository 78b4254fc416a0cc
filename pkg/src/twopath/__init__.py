"""Unified two-path interference: double slits, neutral mesons and Mott scattering."""

from .core import (
    C_E,
    DualityPoint,
    DualityReport,
    UnifiedModel,
    duality_point,
    duality_residual,
    fringe_index,
    oscillatory_factor,
    phase,
    predictability,
    visibility,
)

__all__ = [
    "C_E",
    "DualityPoint",
    "DualityReport",
    "UnifiedModel",
    "duality_point",
    "duality_residual",
    "fringe_index",
    "oscillatory_factor",
    "phase",
    "predictability",
    "visibility",
]

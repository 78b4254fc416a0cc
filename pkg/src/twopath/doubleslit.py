"""Gaussian double-slit optics: Bartell slits-plus-lens and the beam-splitter variant.

Both set-ups produce the same intensity profile

    I(y) = N exp(-y^2/sigma^2) cosh(A y) [1 + cos(B y)/cosh(A y)]

and differ only in how sigma^2, A and B follow from the hardware.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import UnifiedModel, oscillatory_factor


@dataclass(frozen=True)
class BartellSetup:
    """Double slit with Gaussian amplitude filters and a lens of focal length f.

    All lengths in metres, k in 1/m.  ``l == f`` (the Fraunhofer plane) is
    rejected: the visibility is flat there.
    """

    k: float
    x0: float
    d: float
    l: float
    f: float

    def __post_init__(self):
        for name in ("k", "x0", "d", "l", "f"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be a positive finite number, got {v}")
        if math.isclose(self.l, self.f, rel_tol=1e-12, abs_tol=0.0):
            raise ValueError("l == f is the Fraunhofer limit and is excluded")


@dataclass(frozen=True)
class BeamSplitterSetup:
    """Two Gaussian beams of width x0 crossing at half-angle theta, screen displaced by L."""

    k: float
    x0: float
    theta: float
    L: float

    def __post_init__(self):
        if not (self.k > 0 and math.isfinite(self.k)):
            raise ValueError(f"k must be positive, got {self.k}")
        if not (self.x0 > 0 and math.isfinite(self.x0)):
            raise ValueError(f"x0 must be positive, got {self.x0}")
        if not 0.0 < self.theta < math.pi / 2:
            raise ValueError(f"theta must lie in (0, pi/2), got {self.theta}")
        if not (self.L >= 0 and math.isfinite(self.L)):
            raise ValueError(f"L must be non-negative, got {self.L}")


@dataclass(frozen=True)
class IntensityProfile:
    y: np.ndarray
    intensity: np.ndarray
    envelope: np.ndarray
    factor: np.ndarray


def bartell_sigma_squared(s: BartellSetup) -> float:
    return s.x0**2 * (1.0 - s.l / s.f) ** 2 + s.l**2 / (s.k**2 * s.x0**2)


def bartell_ratio(s: BartellSetup) -> float:
    """Closed-form |A/B| = (k x0^2 / l)|1 - l/f|."""
    return abs(s.k * s.x0**2 / s.l * (1.0 - s.l / s.f))


def bartell_model(s: BartellSetup) -> UnifiedModel:
    sigma2 = bartell_sigma_squared(s)
    A = s.d / sigma2 * (1.0 - s.l / s.f)
    B = s.d / sigma2 * s.l / (s.k * s.x0**2)
    return UnifiedModel(A, B, 1.0)


def beamsplitter_sigma_squared(s: BeamSplitterSetup) -> float:
    return s.x0**2


def beamsplitter_ratio(s: BeamSplitterSetup) -> float:
    return s.L / (s.k * s.x0**2)


def beamsplitter_model(s: BeamSplitterSetup) -> UnifiedModel:
    st = math.sin(s.theta)
    return UnifiedModel(2.0 * s.L * st / s.x0**2, 2.0 * s.k * st, 1.0)


def setup_model(s) -> UnifiedModel:
    if isinstance(s, BartellSetup):
        return bartell_model(s)
    if isinstance(s, BeamSplitterSetup):
        return beamsplitter_model(s)
    raise TypeError(f"not an optical set-up: {type(s).__name__}")


def sigma_squared(s) -> float:
    if isinstance(s, BartellSetup):
        return bartell_sigma_squared(s)
    if isinstance(s, BeamSplitterSetup):
        return beamsplitter_sigma_squared(s)
    raise TypeError(f"not an optical set-up: {type(s).__name__}")


def envelope(s, y, normalization: str = "center"):
    """F(y) = N exp(-y^2/sigma^2) cosh(A y).

    normalization="center" fixes N = 1/2 so that I(0) = 1; "envelope" uses
    N = 1, i.e. F(0) = 1.
    """
    if normalization == "center":
        N = 0.5
    elif normalization == "envelope":
        N = 1.0
    else:
        raise ValueError(f"unknown normalization {normalization!r}")
    m = setup_model(s)
    y = np.asarray(y, dtype=float)
    # cosh(Ay) exp(-y^2/s2) evaluated in log space; cosh alone overflows in the far tails
    ay = m.A * np.abs(y)
    log_cosh = ay + np.log1p(np.exp(-2.0 * ay)) - math.log(2.0)
    return N * np.exp(log_cosh - y * y / sigma_squared(s))


def intensity(s, y, normalization: str = "center"):
    m = setup_model(s)
    return envelope(s, y, normalization) * oscillatory_factor(m, y)


def default_grid(s, points: int = 2001) -> np.ndarray:
    half = 5.0 * math.sqrt(sigma_squared(s))
    return np.linspace(-half, half, points)


def profile(s, y=None, normalization: str = "center") -> IntensityProfile:
    y = default_grid(s) if y is None else np.asarray(y, dtype=float)
    m = setup_model(s)
    F = envelope(s, y, normalization)
    g = oscillatory_factor(m, y)
    return IntensityProfile(y=y, intensity=F * g, envelope=F, factor=g)


BARTELL_REFERENCE = BartellSetup(k=1e7, x0=1e-4, d=3e-3, l=0.1, f=0.11)
# theta is free (R does not depend on it); 0.01 rad keeps the small-angle picture
BEAMSPLITTER_REFERENCE = BeamSplitterSetup(k=1e7, x0=1e-4, theta=0.01, L=0.01)

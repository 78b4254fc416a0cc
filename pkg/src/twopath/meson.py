"""Neutral-meson strangeness oscillations with CP violation neglected.

Units: hbar = 1, so masses and widths share the inverse-time unit.  The kaon
preset works in units of the K_S lifetime.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.special import expit

from .core import UnifiedModel, sech


class Flavor(str, Enum):
    K0 = "K0"
    K0BAR = "K0bar"


@dataclass(frozen=True)
class MesonParams:
    delta_m: float
    gamma_S: float
    gamma_L: float

    def __post_init__(self):
        if not (self.delta_m > 0 and math.isfinite(self.delta_m)):
            raise ValueError(f"delta_m must be positive, got {self.delta_m}")
        if not (self.gamma_L > 0):
            raise ValueError(f"gamma_L must be positive, got {self.gamma_L}")
        if not (self.gamma_S > self.gamma_L and math.isfinite(self.gamma_S)):
            raise ValueError(
                f"gamma_S must exceed gamma_L, got gamma_S={self.gamma_S}, gamma_L={self.gamma_L}"
            )

    @property
    def delta_gamma(self) -> float:
        """Gamma_L - Gamma_S (negative)."""
        return self.gamma_L - self.gamma_S

    @classmethod
    def from_ratio(cls, ratio: float, gamma_S: float = 1.0, gamma_L: float = 1.0 / 579.0):
        """Parameters with |dGamma|/(2 dm) = ratio for the given widths."""
        return cls(delta_m=(gamma_S - gamma_L) / (2.0 * ratio), gamma_S=gamma_S, gamma_L=gamma_L)


@dataclass(frozen=True)
class MesonState:
    amp_K0: complex
    amp_K0bar: complex

    @property
    def norm(self) -> float:
        return abs(self.amp_K0) ** 2 + abs(self.amp_K0bar) ** 2


KAON = MesonParams.from_ratio(1.05)


def _flavor(v) -> Flavor:
    return v if isinstance(v, Flavor) else Flavor(v)


def _check_time(t):
    t = np.asarray(t, dtype=float)
    if np.any(t < 0) or np.any(~np.isfinite(t)):
        raise ValueError("time must be finite and non-negative")
    return t


def evolve_amplitudes(p: MesonParams, initial, t):
    """Amplitudes on K0 and K0bar after time t, normalized to undecayed states.

    Vectorized over t.  Written as (e^{dG t/2} +- e^{-i dm t}) / sqrt(2(1 + e^{dG t}))
    so nothing overflows as the K_S component dies out (dG < 0).
    """
    t = _check_time(t)
    half = np.exp(0.5 * p.delta_gamma * t)
    osc = np.exp(-1j * p.delta_m * t)
    denom = np.sqrt(2.0 * (1.0 + half * half))
    same = (half + osc) / denom
    flip = (half - osc) / denom
    if _flavor(initial) is Flavor.K0:
        return same, flip
    return flip, same


def evolve(p: MesonParams, initial, t: float) -> MesonState:
    a0, a1 = evolve_amplitudes(p, initial, t)
    return MesonState(complex(a0), complex(a1))


def strangeness_probability(p: MesonParams, initial, outcome, t):
    """1/2 [1 +- cos(dm t)/cosh(dG t/2)], plus sign when outcome == initial."""
    t = _check_time(t)
    sign = 1.0 if _flavor(initial) is _flavor(outcome) else -1.0
    return 0.5 * (1.0 + sign * np.cos(p.delta_m * t) * sech(0.5 * p.delta_gamma * t))


def meson_model(p: MesonParams) -> UnifiedModel:
    return UnifiedModel(abs(p.delta_gamma) / 2.0, p.delta_m, 1.0)


def meson_predictability(p: MesonParams, t):
    t = _check_time(t)
    return np.abs(np.tanh(0.5 * p.delta_gamma * t))


def meson_predictability_weights(p: MesonParams, t):
    """|w_S - w_L| from the K_S/K_L weights of the surviving state."""
    t = _check_time(t)
    x = p.delta_gamma * t
    return np.abs(expit(x) - expit(-x))


def default_grid(p: MesonParams, points: int = 2001) -> np.ndarray:
    """[0, 12 tau_S]."""
    return np.linspace(0.0, 12.0 / p.gamma_S, points)

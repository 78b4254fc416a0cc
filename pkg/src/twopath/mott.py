"""Mott scattering of identical nuclei below the Coulomb barrier.

The cross section is returned in units of (Z^2 e^2 / 4E)^2, i.e. only the
angular bracket.  The log-tan variable x = ln tan^2(theta/2) turns the
interference term into 1 + C_S cos(eta x)/cosh(x).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import UnifiedModel, sech

ALPHA = 1.0 / 137.035999

# Nuclear rest energies in MeV (atomic mass minus electrons; binding of the
# electrons neglected).
NUCLEAR_MASS_MEV = {
    "He4": 3727.3793,
    "C12": 11174.8632,
    "C13": 12109.4823,
    "O16": 14895.0806,
}


@dataclass(frozen=True)
class MottParams:
    Z: int
    mass_energy: float
    E: float
    spin2: int = 0
    polarized: bool = False

    def __post_init__(self):
        if isinstance(self.Z, bool) or int(self.Z) != self.Z or self.Z < 1:
            raise ValueError(f"Z must be an integer >= 1, got {self.Z}")
        if not (self.mass_energy > 0 and math.isfinite(self.mass_energy)):
            raise ValueError(f"mass_energy must be positive, got {self.mass_energy}")
        if not (self.E > 0 and math.isfinite(self.E)):
            raise ValueError(f"E must be positive, got {self.E}")
        if isinstance(self.spin2, bool) or int(self.spin2) != self.spin2 or self.spin2 < 0:
            raise ValueError(f"spin2 must be a non-negative integer, got {self.spin2}")
        object.__setattr__(self, "Z", int(self.Z))
        object.__setattr__(self, "spin2", int(self.spin2))

    @property
    def spin(self) -> Fraction:
        return Fraction(self.spin2, 2)


@dataclass(frozen=True)
class MottReduced:
    eta: float
    C_S: float
    K: float
    model: UnifiedModel

    @property
    def R(self) -> float:
        return 1.0 / self.eta


def sommerfeld_eta(p: MottParams) -> float:
    if p.E <= 0:
        raise ValueError("E must be positive")
    return p.Z**2 * ALPHA * math.sqrt(p.mass_energy / (2.0 * p.E))


def spin_factor(p: MottParams) -> float:
    if p.polarized or p.spin2 == 0:
        return 1.0
    return (-1.0) ** p.spin2 / (p.spin2 + 1)


def _check_theta(theta):
    theta = np.asarray(theta, dtype=float)
    if np.any(~(theta > 0.0)) or np.any(~(theta < math.pi)):
        raise ValueError("theta must lie strictly inside (0, pi)")
    return theta


def mott_cross_section(p: MottParams, theta):
    theta = _check_theta(theta)
    s2 = np.sin(theta / 2.0) ** 2
    c2 = np.cos(theta / 2.0) ** 2
    x = np.log(np.tan(theta / 2.0) ** 2)
    eta = sommerfeld_eta(p)
    return 1.0 / s2**2 + 1.0 / c2**2 + spin_factor(p) * 2.0 / (s2 * c2) * np.cos(eta * x)


def rutherford_sum(theta):
    """1/sin^4(theta/2) + 1/cos^4(theta/2): the incoherent part of the bracket."""
    theta = _check_theta(theta)
    return 1.0 / np.sin(theta / 2.0) ** 4 + 1.0 / np.cos(theta / 2.0) ** 4


def log_tan_transform(theta):
    """x = ln tan^2(theta/2), computed as ln((1 - cos)/(1 + cos)) via half-angles."""
    theta = _check_theta(theta)
    return 2.0 * (np.log(np.sin(theta / 2.0)) - np.log(np.cos(theta / 2.0)))


def inverse_log_tan(x):
    x = np.asarray(x, dtype=float)
    if np.any(~np.isfinite(x)):
        raise ValueError("x must be finite")
    return 2.0 * np.arctan(np.exp(x / 2.0))


def mott_model(p: MottParams) -> MottReduced:
    eta = sommerfeld_eta(p)
    C = spin_factor(p)
    K = abs(C)
    return MottReduced(eta=eta, C_S=C, K=K, model=UnifiedModel(1.0, eta, K))


def mott_predictability(p: MottParams, theta):
    """Pure: 2|cos theta|/(1 + cos^2 theta).  Mixed: (2S + |tanh x|)/(2S + 1)."""
    theta = _check_theta(theta)
    if p.polarized or p.spin2 == 0:
        c = np.cos(theta)
        return 2.0 * np.abs(c) / (1.0 + c * c)
    t = np.abs(np.tanh(log_tan_transform(theta)))
    return (p.spin2 + t) / (p.spin2 + 1)


def mott_visibility(p: MottParams, theta):
    """|C_S|(1 - cos^2 theta)/(1 + cos^2 theta)."""
    theta = _check_theta(theta)
    c2 = np.cos(theta) ** 2
    return mott_model(p).K * (1.0 - c2) / (1.0 + c2)


def reduced_factor(p: MottParams, x):
    """1 + C_S cos(eta x)/cosh(x)."""
    x = np.asarray(x, dtype=float)
    return 1.0 + spin_factor(p) * np.cos(sommerfeld_eta(p) * x) * sech(x)


def default_grid(points: int = 2001, margin: float = 0.02) -> np.ndarray:
    return np.linspace(margin * math.pi, (1.0 - margin) * math.pi, points)


def _preset(nucleus: str, Z: int, E_keV: float, spin2: int = 0) -> MottParams:
    return MottParams(Z=Z, mass_energy=NUCLEAR_MASS_MEV[nucleus], E=E_keV / 1000.0, spin2=spin2)


PRESETS = {
    "alpha-75keV": _preset("He4", 2, 75.0),
    "alpha-150keV": _preset("He4", 2, 150.0),
    "alpha-200keV": _preset("He4", 2, 200.0),
    "C12-3MeV": _preset("C12", 6, 3000.0),
    "C12-5MeV": _preset("C12", 6, 5000.0),
    "O16-7MeV": _preset("O16", 8, 7000.0),
    "O16-8.8MeV": _preset("O16", 8, 8800.0),
    "O16-10MeV": _preset("O16", 8, 10000.0),
    "C13-75keV": _preset("C13", 6, 75.0, spin2=1),
}

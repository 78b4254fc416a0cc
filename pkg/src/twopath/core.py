"""Universal two-path model: visibility, predictability, phase and fringe index.

Every set-up in this package reduces to three constants (A, B, K):

    V(y) = K / cosh(A y)
    P(y) = 1 - K + K |tanh(A y)|
    phi(y) = B y

All functions accept scalars or numpy arrays and are vectorized over ``y``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

#: arccosh(e) / (2 pi): number of phase periods elapsed while cosh(A y) grows to e
#: when B = A.  The three-digit display form is 0.264.
ARCCOSH_E = math.acosh(math.e)
C_E = ARCCOSH_E / (2.0 * math.pi)


def sech(x):
    """1/cosh(x) without overflow for large |x|."""
    ax = np.abs(np.asarray(x, dtype=float))
    q = np.exp(-ax)
    return 2.0 * q / (1.0 + q * q)


@dataclass(frozen=True)
class UnifiedModel:
    """The (A, B, K) triple.

    ``A`` is stored as ``|A|``: every observable is even in A.  ``K == 1``
    marks a pure state; pass the literal ``1.0`` rather than a computed value
    when a pure state is meant.
    """

    A: float
    B: float
    K: float = 1.0

    def __post_init__(self):
        A, B, K = float(self.A), float(self.B), float(self.K)
        if not (math.isfinite(A) and math.isfinite(B) and math.isfinite(K)):
            raise ValueError(f"non-finite model parameter: A={A}, B={B}, K={K}")
        if B == 0.0:
            raise ValueError("B must be non-zero")
        if not 0.0 < K <= 1.0:
            raise ValueError(f"K must lie in (0, 1], got {K}")
        object.__setattr__(self, "A", abs(A))
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "K", K)

    @property
    def is_pure(self) -> bool:
        return self.K == 1.0

    @property
    def R(self) -> float:
        return abs(self.A / self.B)


@dataclass(frozen=True)
class DualityPoint:
    y: float
    visibility: float
    predictability: float
    phase: float
    duality_residual: float


@dataclass(frozen=True)
class DualityReport:
    """Summary of a model.  ``nu`` and ``e_fold_y`` are ``inf`` when A = 0."""

    R: float
    nu: float
    is_pure: bool
    e_fold_y: float
    max_abs_residual_violation: float = 0.0
    R_rounded: float | None = None
    nu_rounded: float | None = None

    @property
    def unbounded(self) -> bool:
        return math.isinf(self.nu)


def visibility(m: UnifiedModel, y):
    return m.K * sech(m.A * np.asarray(y, dtype=float))


def predictability(m: UnifiedModel, y):
    t = np.abs(np.tanh(m.A * np.asarray(y, dtype=float)))
    return 1.0 - m.K + m.K * t


def phase(m: UnifiedModel, y):
    return m.B * np.asarray(y, dtype=float)


def oscillatory_factor(m: UnifiedModel, y, sign: float = 1.0):
    """I/F = 1 + V(y) cos(B y).

    ``sign`` flips the interference term (fermionic Mott scattering carries a
    negative spin factor while the visibility itself stays positive).
    """
    y = np.asarray(y, dtype=float)
    return 1.0 + sign * visibility(m, y) * np.cos(m.B * y)


def duality_residual(m: UnifiedModel, y):
    """P^2 + V^2 - 1 in closed form, 2K(1-K)(|tanh(A y)| - 1)."""
    t = np.abs(np.tanh(m.A * np.asarray(y, dtype=float)))
    return 2.0 * m.K * (1.0 - m.K) * (t - 1.0)


def duality_point(m: UnifiedModel, y: float) -> DualityPoint:
    return DualityPoint(
        y=float(y),
        visibility=float(visibility(m, y)),
        predictability=float(predictability(m, y)),
        phase=float(phase(m, y)),
        duality_residual=float(duality_residual(m, y)),
    )


def e_fold_position(m: UnifiedModel) -> float:
    """Abscissa where the visibility has dropped to K/e."""
    if m.A == 0.0:
        return math.inf
    return ARCCOSH_E / m.A


def round_ratio(R: float) -> float | None:
    """R rounded to one decimal place (0.1, 0.3, 1).

    Returns None when that rounding gives zero (R < 0.05).
    """
    r = round(R, 1)
    return r if r > 0 else None


def fringe_index(m: UnifiedModel) -> DualityReport:
    if m.A == 0.0:
        return DualityReport(R=0.0, nu=math.inf, is_pure=m.is_pure, e_fold_y=math.inf)
    R = m.R
    r_round = round_ratio(R)
    return DualityReport(
        R=R,
        nu=C_E / R,
        is_pure=m.is_pure,
        e_fold_y=e_fold_position(m),
        R_rounded=r_round,
        nu_rounded=None if r_round is None else C_E / r_round,
    )

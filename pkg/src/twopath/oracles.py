"""Independent numerical checks of the closed forms.

Nothing here reuses the closed-form intensity or probability expressions it
is checking: the optical oracles integrate the paraxial Fresnel kernel (or
superpose the two beams) directly, the meson oracle squares complex
amplitudes, and the fringe counter locates maxima by root-finding.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np
from scipy.optimize import brentq

from . import doubleslit, meson, mott
from .core import (
    C_E,
    DualityReport,
    UnifiedModel,
    e_fold_position,
    fringe_index,
    predictability,
    visibility,
)
from .quadrature import QuadratureError, integrate

WINDOW_HALF_WIDTHS = 8.0  # slit aperture truncated at 8 x0, where T < e^-32
CHUNK = 256


@dataclass(frozen=True)
class OracleResult:
    name: str
    max_rel_error: float
    n_samples: int
    grid_range: tuple[float, float]
    tolerance: float
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        d = asdict(self)
        d["grid_range"] = list(self.grid_range)
        return d


def _result(name, err, grid, tol, detail="") -> OracleResult:
    err = float(err)
    grid = np.asarray(grid, dtype=float)
    return OracleResult(
        name=name,
        max_rel_error=err,
        n_samples=int(grid.size),
        grid_range=(float(grid.min()), float(grid.max())),
        tolerance=float(tol),
        passed=bool(err <= tol),
        detail=detail,
    )


# --- Fresnel propagation ---------------------------------------------------


def _slit_field(s: doubleslit.BartellSetup, y, center, panels, order, amplitude_width):
    """Paraxial field on the screen from one Gaussian slit behind the lens.

    The common factor exp(i k y^2 / 2l) and all constant prefactors are
    dropped; they cancel in |U|^2 and in normalized comparisons.
    """
    a = center - WINDOW_HALF_WIDTHS * s.x0
    b = center + WINDOW_HALF_WIDTHS * s.x0
    curvature = 0.5 * s.k * (1.0 / s.l - 1.0 / s.f)
    out = np.empty(y.size, dtype=complex)
    for i in range(0, y.size, CHUNK):
        yc = y[i : i + CHUNK, None]

        def kernel(x):
            aperture = np.exp(-((x - center) ** 2) / (2.0 * amplitude_width**2))
            return aperture * np.exp(1j * (curvature * x * x - s.k * yc * x / s.l))

        out[i : i + CHUNK] = integrate(kernel, a, b, panels, order)
    return out


def _fresnel_intensity(s, y, centers, panels, order, amplitude_width):
    U = sum(_slit_field(s, y, c, panels, order, amplitude_width) for c in centers)
    return np.abs(U) ** 2


def fresnel_intensity_oracle(
    s: doubleslit.BartellSetup,
    y_grid,
    panels: int = 128,
    order: int = 16,
    rtol: float = 1e-8,
    centers=None,
    transmission: str = "amplitude",
):
    """|U(y)|^2 by direct quadrature of the Fresnel integral.

    ``transmission`` selects how exp(-x^2/2x0^2) is read: as the amplitude
    filter ("amplitude") or as the intensity filter ("intensity", amplitude
    exp(-x^2/4x0^2)).  The node count per slit is ``panels * order`` and is
    doubled once; a change above ``rtol`` (relative to the peak) raises
    QuadratureError.
    """
    y = np.atleast_1d(np.asarray(y_grid, dtype=float))
    if centers is None:
        centers = (-0.5 * s.d, 0.5 * s.d)
    if transmission == "amplitude":
        width = s.x0
    elif transmission == "intensity":
        width = math.sqrt(2.0) * s.x0
    else:
        raise ValueError(f"unknown transmission reading {transmission!r}")
    coarse = _fresnel_intensity(s, y, centers, panels, order, width)
    fine = _fresnel_intensity(s, y, centers, 2 * panels, order, width)
    peak = np.max(fine)
    change = float(np.max(np.abs(fine - coarse)) / peak) if peak > 0 else 0.0
    if not change <= rtol:
        raise QuadratureError(
            f"Fresnel quadrature not converged: doubling {panels}x{order} nodes per slit "
            f"changed the intensity by {change:.3e} relative (tolerance {rtol:.1e})"
        )
    return fine


def fresnel_sigma_squared(s: doubleslit.BartellSetup, transmission: str = "amplitude", **kw):
    """Envelope width sigma^2 recovered from a single centred slit.

    A lone Gaussian slit gives I(y)/I(0) = exp(-y^2/sigma^2); sigma^2 is read
    off at a few abscissae and the estimates returned as an array.
    """
    scale = s.x0 * abs(1.0 - s.l / s.f) + s.l / (s.k * s.x0)
    y = np.array([0.0, 0.5, 1.0, 1.5, 2.0]) * scale
    I = fresnel_intensity_oracle(s, y, centers=(0.0,), transmission=transmission, **kw)
    return -y[1:] ** 2 / np.log(I[1:] / I[0])


def verify_bartell(s: doubleslit.BartellSetup, y_grid=None, tol: float = 1e-6, **kw):
    """Fresnel oracle vs the closed-form profile, both normalized to 1 at y = 0."""
    y = doubleslit.default_grid(s) if y_grid is None else np.asarray(y_grid, dtype=float)
    closed = doubleslit.intensity(s, y)
    I = fresnel_intensity_oracle(s, np.concatenate(([0.0], y)), **kw)
    oracle = I[1:] / I[0]
    err = np.max(np.abs(closed - oracle)) / np.max(closed)
    return _result("fresnel-vs-closed-form", err, y, tol)


def verify_bartell_sigma(s: doubleslit.BartellSetup, tol: float = 1e-6, **kw):
    est = fresnel_sigma_squared(s, **kw)
    expected = doubleslit.bartell_sigma_squared(s)
    err = np.max(np.abs(est - expected)) / expected
    return _result(
        "single-slit-envelope-sigma2",
        err,
        np.array([0.0, 2.0]),
        tol,
        detail=f"sigma2 oracle={float(np.mean(est)):.12e} closed={expected:.12e}",
    )


def beamsplitter_oracle(s: doubleslit.BeamSplitterSetup, y_grid, swap: bool = False):
    """|U+ + U-|^2 for two tilted Gaussian beams with spot centres at +-L sin(theta)."""
    y = np.asarray(y_grid, dtype=float)
    st = math.sin(s.theta)
    yc = s.L * st

    def beam(sign):
        return np.exp(-((y - sign * yc) ** 2) / (2.0 * s.x0**2)) * np.exp(sign * 1j * s.k * st * y)

    up, down = beam(+1.0), beam(-1.0)
    U = down + up if swap else up + down
    return np.abs(U) ** 2


def verify_beamsplitter(s: doubleslit.BeamSplitterSetup, y_grid=None, tol: float = 1e-6):
    y = doubleslit.default_grid(s) if y_grid is None else np.asarray(y_grid, dtype=float)
    closed = doubleslit.intensity(s, y)
    I = beamsplitter_oracle(s, np.concatenate(([0.0], y)))
    oracle = I[1:] / I[0]
    err = np.max(np.abs(closed - oracle)) / np.max(closed)
    return _result("beam-superposition-vs-closed-form", err, y, tol)


# --- meson and Mott identities --------------------------------------------


def verify_meson(p: meson.MesonParams, t_grid=None, tol: float = 1e-12):
    """|<outcome|state(t)>|^2 from the amplitudes vs the closed-form probabilities."""
    t = meson.default_grid(p) if t_grid is None else np.asarray(t_grid, dtype=float)
    err = 0.0
    for initial in meson.Flavor:
        amps = dict(zip(meson.Flavor, meson.evolve_amplitudes(p, initial, t)))
        for outcome in meson.Flavor:
            brute = np.abs(amps[outcome]) ** 2
            closed = meson.strangeness_probability(p, initial, outcome, t)
            err = max(err, float(np.max(np.abs(brute - closed))))
    return _result("amplitude-modulus-vs-closed-form", err, t, tol)


def verify_mott(p: mott.MottParams, theta_grid=None, tol: float = 1e-12):
    """Cross-section bracket over the Rutherford sum vs 1 + C_S cos(eta x)/cosh x."""
    theta = mott.default_grid() if theta_grid is None else np.asarray(theta_grid, dtype=float)
    ratio = mott.mott_cross_section(p, theta) / mott.rutherford_sum(theta)
    reduced = mott.reduced_factor(p, mott.log_tan_transform(theta))
    err = float(np.max(np.abs(ratio - reduced)))
    return _result("mott-reduction-identity", err, theta, tol)


# --- fringe counting and duality scan -------------------------------------


@dataclass(frozen=True)
class FringeCount:
    count: int | None
    nu: float
    maxima: tuple[float, ...]
    unbounded: bool = False

    @property
    def consistent(self) -> bool:
        """|count - nu| <= 1."""
        return self.unbounded or abs(self.count - self.nu) <= 1.0


def count_fringes(m: UnifiedModel, samples_per_half_period: int = 64) -> FringeCount:
    """Local maxima of 1 + V(y) cos(B y) on (0, y_e], y_e the e-fold position.

    The derivative is -K sech(Ay) h(y) with h = A tanh(Ay) cos(By) + B sin(By);
    maxima sit where h crosses from negative to positive.  Crossings are
    bracketed on a grid and refined with Brent's method.
    """
    if m.A == 0.0:
        return FringeCount(count=None, nu=math.inf, maxima=(), unbounded=True)
    A, B = m.A, abs(m.B)
    y_end = e_fold_position(m)

    def h(y):
        return A * np.tanh(A * y) * np.cos(B * y) + B * np.sin(B * y)

    half_periods = math.ceil(B * y_end / math.pi)
    y = np.linspace(0.0, y_end, samples_per_half_period * (half_periods + 1) + 1)[1:]
    hy = h(y)
    maxima = []
    for i in range(hy.size - 1):
        if hy[i] < 0.0 <= hy[i + 1]:
            maxima.append(brentq(h, y[i], y[i + 1], xtol=1e-14 * y_end))
    return FringeCount(count=len(maxima), nu=C_E / m.R, maxima=tuple(maxima))


def duality_scan(m: UnifiedModel, y_grid) -> DualityReport:
    """Evaluate P^2 + V^2 pointwise and compare with the duality bound.

    ``max_abs_residual_violation`` is the largest of |P^2 + V^2 - 1| (pure) or
    |P^2 + V^2 - 1 - 2K(1-K)(|tanh Ay| - 1)| together with any positive part
    of P^2 + V^2 - 1 (mixed).
    """
    y = np.asarray(y_grid, dtype=float)
    if y.size == 0:
        raise ValueError("empty grid")
    direct = predictability(m, y) ** 2 + visibility(m, y) ** 2 - 1.0
    if m.is_pure:
        violation = float(np.max(np.abs(direct)))
    else:
        expected = 2.0 * m.K * (1.0 - m.K) * (np.abs(np.tanh(m.A * y)) - 1.0)
        violation = max(float(np.max(np.abs(direct - expected))), float(np.max(direct)), 0.0)
    base = fringe_index(m)
    return DualityReport(
        R=base.R,
        nu=base.nu,
        is_pure=base.is_pure,
        e_fold_y=base.e_fold_y,
        max_abs_residual_violation=violation,
        R_rounded=base.R_rounded,
        nu_rounded=base.nu_rounded,
    )


def max_residual(m: UnifiedModel, y_grid) -> float:
    """Largest signed P^2 + V^2 - 1 on the grid (<= 0 up to rounding)."""
    y = np.asarray(y_grid, dtype=float)
    return float(np.max(predictability(m, y) ** 2 + visibility(m, y) ** 2 - 1.0))

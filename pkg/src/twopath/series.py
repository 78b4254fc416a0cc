"""Sampled pattern series for every set-up kind, plus CSV/SVG/JSON emission."""

from __future__ import annotations

import io
import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import core, doubleslit, meson, mott, oracles
from .config import ConfigError, SetupConfig

COLUMNS = ("y", "intensity_factor", "visibility", "predictability", "phase", "duality_residual")
ABSCISSA = {"bartell": "y [m]", "beamsplitter": "y [m]", "meson": "t [1/gamma_S units]", "mott": "theta [rad]"}


@dataclass
class PatternSeries:
    columns: dict
    metadata: dict = field(default_factory=dict)

    @property
    def y(self) -> np.ndarray:
        return self.columns["y"]

    def __len__(self) -> int:
        return int(self.y.size)


def model_for(cfg: SetupConfig) -> core.UnifiedModel:
    if cfg.kind in ("bartell", "beamsplitter"):
        return doubleslit.setup_model(cfg.setup)
    if cfg.kind == "meson":
        return meson.meson_model(cfg.setup)
    return mott.mott_model(cfg.setup).model


def grid_for(cfg: SetupConfig) -> np.ndarray:
    s = cfg.setup
    if cfg.grid is None:
        if cfg.kind == "meson":
            return meson.default_grid(s)
        if cfg.kind == "mott":
            return mott.default_grid()
        return doubleslit.default_grid(s)
    g = cfg.grid
    if cfg.kind == "meson" and g.min < 0:
        raise ConfigError("grid.min", "meson time grid must start at t >= 0")
    if cfg.kind == "mott" and not (0.0 < g.min and g.max < math.pi):
        raise ConfigError("grid", "mott theta grid must lie strictly inside (0, pi)")
    return np.linspace(g.min, g.max, g.points)


def build_series(cfg: SetupConfig) -> PatternSeries:
    m = model_for(cfg)
    y = grid_for(cfg)
    s = cfg.setup
    if cfg.kind in ("bartell", "beamsplitter"):
        factor = core.oscillatory_factor(m, y)
        V, P, phi = core.visibility(m, y), core.predictability(m, y), core.phase(m, y)
    elif cfg.kind == "meson":
        factor = 2.0 * meson.strangeness_probability(s, meson.Flavor.K0, meson.Flavor.K0, y)
        V, P, phi = core.visibility(m, y), meson.meson_predictability(s, y), core.phase(m, y)
    else:
        x = mott.log_tan_transform(y)
        factor = mott.reduced_factor(s, x)
        V, P, phi = core.visibility(m, x), mott.mott_predictability(s, y), core.phase(m, x)
    residual = P**2 + V**2 - 1.0
    columns = {
        "y": y,
        "intensity_factor": factor,
        "visibility": V,
        "predictability": P,
        "phase": phi,
        "duality_residual": residual,
    }
    return PatternSeries(columns=columns, metadata=report(cfg, m, y))


def report(cfg: SetupConfig, m: core.UnifiedModel | None = None, y=None) -> dict:
    """Summary quantities for a configuration (the cmd_report payload)."""
    m = model_for(cfg) if m is None else m
    y = grid_for(cfg) if y is None else y
    if cfg.kind == "mott":
        y = mott.log_tan_transform(y)
    scan = oracles.duality_scan(m, y)
    out = {
        "kind": cfg.kind,
        "preset": cfg.preset,
        "abscissa": ABSCISSA[cfg.kind],
        "A": m.A,
        "B": m.B,
        "K": m.K,
        "R": scan.R,
        "nu": scan.nu,
        "R_rounded": scan.R_rounded,
        "nu_rounded": scan.nu_rounded,
        "is_pure": scan.is_pure,
        "e_fold_y": scan.e_fold_y,
        "max_residual": oracles.max_residual(m, y),
        "max_abs_residual_violation": scan.max_abs_residual_violation,
    }
    if cfg.kind == "mott":
        out["C_S"] = mott.spin_factor(cfg.setup)
        out["eta"] = mott.sommerfeld_eta(cfg.setup)
    return {k: _jsonable(v) for k, v in out.items()}


def _jsonable(v):
    if isinstance(v, (float, np.floating)):
        v = float(v)
        return v if math.isfinite(v) else None
    if isinstance(v, np.bool_):
        return bool(v)
    return v


def dumps_report(meta: dict) -> str:
    return json.dumps(meta, indent=2, sort_keys=True, allow_nan=False) + "\n"


def to_csv(series: PatternSeries) -> str:
    """Metadata as ``# key: json`` comment lines, then a header and 17-digit rows."""
    buf = io.StringIO()
    for key in sorted(series.metadata):
        buf.write(f"# {key}: {json.dumps(series.metadata[key], allow_nan=False)}\n")
    buf.write(",".join(COLUMNS) + "\n")
    data = np.column_stack([series.columns[c] for c in COLUMNS])
    for row in data:
        buf.write(",".join(f"{v:.16e}" for v in row) + "\n")
    return buf.getvalue()


def read_csv(text: str) -> PatternSeries:
    meta, rows, header = {}, [], None
    for line in text.splitlines():
        if line.startswith("# "):
            key, _, value = line[2:].partition(": ")
            meta[key] = json.loads(value)
        elif header is None:
            header = line.split(",")
        elif line:
            rows.append([float(v) for v in line.split(",")])
    data = np.array(rows, dtype=float).reshape(-1, len(header))
    return PatternSeries(columns={h: data[:, i] for i, h in enumerate(header)}, metadata=meta)


# --- SVG --------------------------------------------------------------------

WIDTH, HEIGHT = 800, 500
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 70, 20, 30, 60


def to_svg(series: PatternSeries, title: str | None = None) -> str:
    """Oscillatory factor against the phase in units of 2 pi (fringe counts).

    Dashed guides at 1 +- 1/e; a vertical marker at the fringe index nu.
    """
    x = series.columns["phase"] / (2.0 * math.pi)
    g = series.columns["intensity_factor"]
    x_lo, x_hi = float(np.min(x)), float(np.max(x))
    if x_hi == x_lo:
        x_hi = x_lo + 1.0
    y_lo, y_hi = 0.0, 2.0
    pw, ph = WIDTH - MARGIN_L - MARGIN_R, HEIGHT - MARGIN_T - MARGIN_B

    def px(v):
        return MARGIN_L + (v - x_lo) / (x_hi - x_lo) * pw

    def py(v):
        return MARGIN_T + (y_hi - v) / (y_hi - y_lo) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}" '
        f'width="{WIDTH}" height="{HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<rect x="{MARGIN_L}" y="{MARGIN_T}" width="{pw}" height="{ph}" '
        'fill="none" stroke="black" stroke-width="1"/>',
    ]
    for level in (1.0 - 1.0 / math.e, 1.0 + 1.0 / math.e):
        out.append(
            f'<line x1="{MARGIN_L}" y1="{py(level):.2f}" x2="{MARGIN_L + pw}" y2="{py(level):.2f}" '
            'stroke="gray" stroke-dasharray="6,4" stroke-width="1"/>'
        )
    nu = series.metadata.get("nu")
    if nu is not None and x_lo <= nu <= x_hi:
        out.append(
            f'<line x1="{px(nu):.2f}" y1="{MARGIN_T}" x2="{px(nu):.2f}" y2="{MARGIN_T + ph}" '
            'stroke="firebrick" stroke-width="1.5"/>'
        )
        out.append(
            f'<text x="{px(nu) + 4:.2f}" y="{MARGIN_T + 14}" font-size="12" '
            f'fill="firebrick">nu = {nu:.3f}</text>'
        )
    pts = " ".join(f"{px(a):.2f},{py(b):.2f}" for a, b in zip(x, g))
    out.append(f'<polyline points="{pts}" fill="none" stroke="navy" stroke-width="1.5"/>')
    for v in np.linspace(y_lo, y_hi, 5):
        out.append(
            f'<text x="{MARGIN_L - 8}" y="{py(v) + 4:.2f}" font-size="12" text-anchor="end">{v:.1f}</text>'
        )
    for v in np.linspace(x_lo, x_hi, 5):
        out.append(
            f'<text x="{px(v):.2f}" y="{MARGIN_T + ph + 18}" font-size="12" '
            f'text-anchor="middle">{v:.2f}</text>'
        )
    out.append(
        f'<text x="{MARGIN_L + pw / 2:.1f}" y="{HEIGHT - 15}" font-size="14" '
        'text-anchor="middle">phase / 2pi (fringes)</text>'
    )
    out.append(
        f'<text x="18" y="{MARGIN_T + ph / 2:.1f}" font-size="14" text-anchor="middle" '
        f'transform="rotate(-90 18 {MARGIN_T + ph / 2:.1f})">I / F</text>'
    )
    if title is None:
        R = series.metadata.get("R")
        title = f"{series.metadata.get('kind', '')}  R = {R:.4g}" if R is not None else ""
    out.append(f'<text x="{WIDTH / 2:.1f}" y="20" font-size="14" text-anchor="middle">{title}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"

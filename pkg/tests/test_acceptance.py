"""Exit criteria.  Each test records one PASS/FAIL line in the terminal summary."""

import io
import math
import time

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from twopath import cli, doubleslit, meson, mott, oracles
from twopath.config import PRESETS, from_preset
from twopath.core import C_E, UnifiedModel, fringe_index, predictability, visibility

pytestmark = pytest.mark.acceptance


def record(n, title, ok, detail):
    ACCEPTANCE_LINES.append(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}  ({detail})")
    assert ok, f"criterion {n} failed: {detail}"


def _dense(model, lo, hi, n=10_000):
    y = np.linspace(lo, hi, n)
    return float(np.max(np.abs(predictability(model, y) ** 2 + visibility(model, y) ** 2 - 1.0)))


def test_1_pure_duality_equality():
    t0 = time.perf_counter()
    worst = {}
    for name, s in [("bartell", doubleslit.BARTELL_REFERENCE), ("beamsplitter", doubleslit.BEAMSPLITTER_REFERENCE)]:
        half = 5 * math.sqrt(doubleslit.sigma_squared(s))
        worst[name] = _dense(doubleslit.setup_model(s), -half, half)
    worst["kaon"] = _dense(meson.meson_model(meson.KAON), 0.0, 12.0)
    theta = np.linspace(0.02 * math.pi, 0.98 * math.pi, 10_000)
    p = mott.PRESETS["alpha-150keV"]
    P, V = mott.mott_predictability(p, theta), mott.mott_visibility(p, theta)
    worst["mott-S0"] = float(np.max(np.abs(P**2 + V**2 - 1)))
    elapsed = time.perf_counter() - t0
    ok = max(worst.values()) < 1e-12 and elapsed < 1.0
    record(1, "pure duality P^2+V^2=1", ok, f"max |res|={max(worst.values()):.2e}, {elapsed:.3f}s")


def test_2_mixed_duality_inequality():
    t0 = time.perf_counter()
    theta = np.linspace(0.02 * math.pi, 0.98 * math.pi, 10_000)
    errs, highest = [], -math.inf
    for spin2, K in [(1, 1 / 2), (2, 1 / 3), (4, 1 / 5)]:
        p = mott.MottParams(Z=6, mass_energy=12109.4823, E=0.075, spin2=spin2)
        r = mott.mott_model(p)
        assert r.K == pytest.approx(K, rel=1e-15)
        x = mott.log_tan_transform(theta)
        residual = mott.mott_predictability(p, theta) ** 2 + visibility(r.model, x) ** 2 - 1
        closed = 2 * K * (1 - K) * (np.abs(np.tanh(x)) - 1)
        errs.append(float(np.max(np.abs(residual - closed))))
        highest = max(highest, float(np.max(residual)))
    elapsed = time.perf_counter() - t0
    ok = max(errs) < 1e-12 and highest <= 0.0 and elapsed < 1.0
    record(2, "mixed duality residual = 2K(1-K)(|tanh x|-1) <= 0", ok,
           f"max err={max(errs):.2e}, max residual={highest:.2e}, {elapsed:.3f}s")


def test_3_reference_ratios():
    R_bartell = doubleslit.bartell_model(doubleslit.BARTELL_REFERENCE).R
    R_split = doubleslit.beamsplitter_model(doubleslit.BEAMSPLITTER_REFERENCE).R
    rep = fringe_index(doubleslit.bartell_model(doubleslit.BARTELL_REFERENCE))
    ok = (
        abs(R_bartell - 0.0909) <= 1e-4
        and abs(R_split - 0.1) <= 1e-12
        and rep.R_rounded == 0.1
        and round(rep.nu_rounded, 2) == 2.64
    )
    record(3, "double-slit and beam-splitter R and nu", ok,
           f"R={R_bartell:.6f}, R_split={R_split:.15f}, nu(rounded R)={rep.nu_rounded:.4f}")


def test_4_fresnel_oracle():
    t0 = time.perf_counter()
    s = doubleslit.BARTELL_REFERENCE
    profile = oracles.verify_bartell(s, doubleslit.default_grid(s, 2001), tol=1e-6)
    sigma = oracles.verify_bartell_sigma(s, tol=1e-6)
    elapsed = time.perf_counter() - t0
    ok = profile.passed and sigma.passed and profile.n_samples == 2001 and elapsed < 30.0
    record(4, "Fresnel quadrature vs closed-form intensity", ok,
           f"profile err={profile.max_rel_error:.2e}, sigma2 err={sigma.max_rel_error:.2e}, {elapsed:.2f}s")


def test_5_kaon_oracle():
    t0 = time.perf_counter()
    res = oracles.verify_meson(meson.KAON, np.linspace(0.0, 12.0, 10_000), tol=1e-12)
    rep = fringe_index(meson.meson_model(meson.MesonParams.from_ratio(1.05)))
    elapsed = time.perf_counter() - t0
    ok = res.passed and abs(rep.R - 1.05) < 1e-12 and abs(rep.nu - 0.2512) <= 1e-3 and elapsed < 1.0
    record(5, "kaon amplitudes vs closed form; R=1.05, nu", ok,
           f"err={res.max_rel_error:.2e}, R={rep.R:.12f}, nu={rep.nu:.5f}, {elapsed:.3f}s")


def test_6_mott_reduction():
    t0 = time.perf_counter()
    theta = np.linspace(0.02 * math.pi, 0.98 * math.pi, 10_000)
    errs = [oracles.verify_mott(p, theta, tol=1e-12).max_rel_error for p in mott.PRESETS.values()]
    pure = mott.PRESETS["O16-10MeV"]
    x = mott.log_tan_transform(theta)
    c = np.cos(theta)
    fig_err = float(np.max(np.abs(2 * np.abs(c) / (1 + c**2) - np.abs(np.tanh(x)))))
    p_err = float(np.max(np.abs(mott.mott_predictability(pure, theta) - np.abs(np.tanh(x)))))
    elapsed = time.perf_counter() - t0
    ok = max(errs) < 1e-12 and max(fig_err, p_err) < 1e-12 and elapsed < 1.0
    record(6, "Mott bracket/Rutherford = 1 + C_S cos(eta x)/cosh x", ok,
           f"identity err={max(errs):.2e}, predictability err={max(fig_err, p_err):.2e}, {elapsed:.3f}s")


def test_7_sommerfeld_corroboration():
    alpha = {n: 1 / mott.sommerfeld_eta(mott.PRESETS[n]) for n in ("alpha-150keV", "alpha-200keV")}
    heavy = {n: 1 / mott.sommerfeld_eta(mott.PRESETS[n]) for n in ("C12-5MeV", "O16-7MeV", "O16-8.8MeV", "O16-10MeV")}
    ok = all(0.30 <= r <= 0.36 for r in alpha.values()) and all(0.06 <= r <= 0.12 for r in heavy.values())
    detail = ", ".join(f"{k}={v:.3f}" for k, v in {**alpha, **heavy}.items())
    record(7, "Sommerfeld R = 1/eta in expected ranges", ok, detail)


def test_8_fringe_counting():
    t0 = time.perf_counter()
    counts = {R: oracles.count_fringes(UnifiedModel(R, 1.0)) for R in (0.05, 0.1, 0.3, 1.0)}
    constant_ok = abs(0.264 - C_E) < 5e-4
    elapsed = time.perf_counter() - t0
    ok = all(abs(c.count - c.nu) <= 1 for c in counts.values()) and constant_ok and elapsed < 1.0
    detail = ", ".join(f"R={R}: {c.count} vs nu={c.nu:.3f}" for R, c in counts.items())
    record(8, "fringe count within 1 of nu; 0.264 constant", ok, f"{detail}; C_e={C_E:.6f}")


def test_9_determinism():
    t0 = time.perf_counter()
    same = {}
    for name in PRESETS:
        runs = []
        for _ in range(2):
            buf = io.StringIO()
            cli.cmd_profile(from_preset(name), stdout=buf)
            runs.append(buf.getvalue().encode())
        same[name] = runs[0] == runs[1]
    elapsed = time.perf_counter() - t0
    ok = all(same.values()) and elapsed < 10.0
    record(9, "byte-identical CSV on every preset", ok, f"{sum(same.values())}/{len(same)} identical, {elapsed:.2f}s")

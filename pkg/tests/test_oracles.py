"""Oracle machinery: Fresnel quadrature, beam superposition, fringe counter, duality scan."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twopath import doubleslit as ds
from twopath import meson, mott, oracles
from twopath.core import UnifiedModel, oscillatory_factor
from twopath.quadrature import QuadratureError, composite_nodes, integrate

REF = ds.BARTELL_REFERENCE


class TestQuadrature:
    def test_polynomial_exact(self):
        assert integrate(lambda x: x**7 - 3 * x**2, -1.0, 2.0, panels=3, order=4) == pytest.approx(
            (2**8 - 1) / 8 - (8 + 1), rel=1e-14
        )

    def test_gaussian(self):
        val = integrate(lambda x: np.exp(-(x**2)), -8, 8, panels=16, order=16)
        assert val == pytest.approx(math.sqrt(math.pi), rel=1e-14)

    def test_vector_valued(self):
        k = np.array([1.0, 2.0, 3.0])
        val = integrate(lambda x: np.cos(k[:, None] * x), 0.0, math.pi / 2, panels=4, order=8)
        np.testing.assert_allclose(val, np.sin(k * math.pi / 2) / k, atol=1e-14)

    def test_node_count(self):
        x, w = composite_nodes(0.0, 1.0, 128, 16)
        assert x.size == 2048 and w.sum() == pytest.approx(1.0, rel=1e-14)
        with pytest.raises(ValueError):
            composite_nodes(0.0, 1.0, 0)


class TestFresnel:
    def test_single_slit_envelope_is_the_closed_form_sigma(self):
        est = oracles.fresnel_sigma_squared(REF)
        np.testing.assert_allclose(est, ds.bartell_sigma_squared(REF), rtol=1e-6)

    def test_single_slit_far_from_focus(self):
        s = ds.BartellSetup(k=2e7, x0=5e-5, d=1e-3, l=0.3, f=0.2)
        np.testing.assert_allclose(oracles.fresnel_sigma_squared(s), ds.bartell_sigma_squared(s), rtol=1e-6)

    def test_intensity_transmission_reading_is_rejected(self):
        est = oracles.fresnel_sigma_squared(REF, transmission="intensity")
        assert np.all(np.abs(est / ds.bartell_sigma_squared(REF) - 1) > 0.1)
        with pytest.raises(ValueError):
            oracles.fresnel_intensity_oracle(REF, [0.0], transmission="phase")

    def test_oscillatory_factor_at_half_periods(self):
        m = ds.bartell_model(REF)
        y = np.array([0.0, math.pi, 2 * math.pi, 3 * math.pi]) / m.B
        I = oracles.fresnel_intensity_oracle(REF, y)
        env = ds.envelope(REF, y, normalization="envelope")
        factor = 2.0 * (I / I[0]) / env
        np.testing.assert_allclose(factor, oscillatory_factor(m, y), atol=1e-9)

    def test_center_is_a_local_maximum(self):
        sigma = math.sqrt(ds.bartell_sigma_squared(REF))
        y = np.linspace(-0.05, 0.05, 11) * sigma
        I = oracles.fresnel_intensity_oracle(REF, y)
        assert np.argmax(I) == 5

    def test_center_is_global_maximum_near_focus(self):
        s = ds.BartellSetup(k=1e7, x0=1e-4, d=3e-3, l=0.1, f=0.1005)
        y = ds.default_grid(s, 401)
        I = oracles.fresnel_intensity_oracle(s, y)
        assert np.argmax(I) == 200

    def test_reference_profile(self):
        r = oracles.verify_bartell(REF)
        assert r.passed and r.max_rel_error <= 1e-6 and r.n_samples == 2001

    def test_screen_beyond_focus(self):
        s = ds.BartellSetup(k=1e7, x0=1e-4, d=2e-3, l=0.13, f=0.11)
        assert oracles.verify_bartell(s).max_rel_error <= 1e-6

    def test_nonconvergence_is_reported(self):
        with pytest.raises(QuadratureError, match="not converged"):
            oracles.fresnel_intensity_oracle(REF, ds.default_grid(REF, 21), panels=1, order=4)

    def test_sigma_result_record(self):
        r = oracles.verify_bartell_sigma(REF)
        assert r.passed and "sigma2" in r.detail


class TestBeamSplitter:
    def test_full_overlap_gives_pure_cosine_fringes(self):
        s = ds.BeamSplitterSetup(k=1e7, x0=1e-4, theta=0.01, L=0.0)
        y = ds.default_grid(s, 501)
        I = oracles.beamsplitter_oracle(s, y)
        B = 2 * s.k * math.sin(s.theta)
        np.testing.assert_allclose(I, 2 * np.exp(-(y**2) / s.x0**2) * (1 + np.cos(B * y)), atol=1e-13)

    def test_reference_factor(self):
        s = ds.BEAMSPLITTER_REFERENCE
        m = ds.beamsplitter_model(s)
        y = ds.default_grid(s)
        I = oracles.beamsplitter_oracle(s, y)
        yc = s.L * math.sin(s.theta)
        envelope = 2 * np.exp(-(y**2 + yc**2) / s.x0**2) * np.cosh(m.A * y)
        np.testing.assert_allclose(I / envelope, oscillatory_factor(m, y), atol=1e-10)
        assert m.R == pytest.approx(0.1, abs=1e-12)

    def test_label_swap(self):
        y = ds.default_grid(ds.BEAMSPLITTER_REFERENCE, 301)
        a = oracles.beamsplitter_oracle(ds.BEAMSPLITTER_REFERENCE, y)
        b = oracles.beamsplitter_oracle(ds.BEAMSPLITTER_REFERENCE, y, swap=True)
        np.testing.assert_array_equal(a, b)

    def test_verify(self):
        assert oracles.verify_beamsplitter(ds.BEAMSPLITTER_REFERENCE).max_rel_error < 1e-12


class TestFringeCounting:
    @pytest.mark.parametrize(
        "R,allowed,nu",
        [(0.1, {2, 3}, 2.6379), (1.0, {0}, 0.2638), (0.3, {0, 1}, 0.8793), (0.05, {4, 5, 6}, 5.2758)],
    )
    def test_table(self, R, allowed, nu):
        c = oracles.count_fringes(UnifiedModel(R, 1.0))
        assert c.count in allowed
        assert c.nu == pytest.approx(nu, abs=1e-4)
        assert c.consistent

    def test_maxima_are_stationary_points(self):
        m = UnifiedModel(0.05, 1.0, 0.5)
        c = oracles.count_fringes(m)
        h = 1e-6
        for y in c.maxima:
            g0 = oscillatory_factor(m, y)
            assert g0 > oscillatory_factor(m, y - 1e-3) and g0 > oscillatory_factor(m, y + 1e-3)
            slope = (oscillatory_factor(m, y + h) - oscillatory_factor(m, y - h)) / (2 * h)
            assert abs(slope) < 1e-8

    def test_unbounded(self):
        c = oracles.count_fringes(UnifiedModel(0.0, 1.0))
        assert c.unbounded and c.count is None and c.consistent

    @settings(max_examples=60, deadline=None)
    @given(st.floats(min_value=0.02, max_value=5.0), st.floats(min_value=0.05, max_value=1.0))
    def test_count_within_one_of_index(self, R, K):
        c = oracles.count_fringes(UnifiedModel(R, 1.0, K))
        assert abs(c.count - c.nu) <= 1.0


class TestDualityScan:
    def test_kaon_equality(self):
        t = np.linspace(0, 12, 10_001)
        r = oracles.duality_scan(meson.meson_model(meson.KAON), t)
        assert r.is_pure and r.max_abs_residual_violation < 1e-12

    def test_c13_inequality(self):
        r = mott.mott_model(mott.PRESETS["C13-75keV"])
        x = np.linspace(-20, 20, 4001)
        rep = oracles.duality_scan(r.model, x)
        assert not rep.is_pure and rep.max_abs_residual_violation < 1e-12
        assert oracles.max_residual(r.model, x) <= 0.0
        assert oracles.max_residual(r.model, np.array([0.0])) == pytest.approx(-0.5)

    def test_far_tail_residual_vanishes(self):
        m = UnifiedModel(1.0, 2.0, 0.3)
        assert oracles.max_residual(m, np.array([40.0])) == pytest.approx(0.0, abs=1e-15)

    def test_empty_grid(self):
        with pytest.raises(ValueError):
            oracles.duality_scan(UnifiedModel(1.0, 1.0), [])


def test_oracle_result_pass_flag():
    r = oracles._result("x", 2e-6, np.array([0.0, 1.0]), 1e-6)
    assert not r.passed and r.to_dict()["grid_range"] == [0.0, 1.0]
    assert oracles._result("x", 1e-6, np.array([0.0]), 1e-6).passed


def test_meson_and_mott_identities():
    assert oracles.verify_meson(meson.KAON).max_rel_error < 1e-12
    for p in mott.PRESETS.values():
        assert oracles.verify_mott(p).max_rel_error < 1e-12

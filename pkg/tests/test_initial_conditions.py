"""Tests for initial-condition generation."""

import numpy as np
import pytest
from pydantic import ValidationError

from eulervoigt.core.diagnostics import energy
from eulervoigt.core.errors import BandLimitError
from eulervoigt.core.spectral import (
    Grid,
    curl,
    inverse_transform,
    is_solenoidal,
    l2_norm,
)
from eulervoigt.io.initial_conditions import (
    InitialConditionKind,
    InitialConditionSpec,
    generate_ic,
)

TWO_PI = 2.0 * np.pi


@pytest.mark.parametrize("kind", list(InitialConditionKind))
def test_every_kind_is_mean_free_and_solenoidal(kind, grid16):
    u = generate_ic(InitialConditionSpec(kind=kind), grid16)
    assert u.shape == grid16.vector_shape
    assert is_solenoidal(u, grid16)
    assert np.all(u[:, 0, 0, 0] == 0.0)
    assert np.all(u[:, ~grid16.dealias_mask] == 0.0)


class TestClassicalFlows:
    def test_taylor_green_energy(self, taylor_green16):
        assert energy(taylor_green16) == pytest.approx(0.25, abs=1e-15)

    def test_taylor_green_samples(self, grid16, taylor_green16):
        x1, x2, x3 = grid16.points * TWO_PI
        samples = inverse_transform(taylor_green16, grid16)
        np.testing.assert_allclose(
            samples[0], np.sin(x1) * np.cos(x2) * np.cos(x3), rtol=0, atol=1e-13
        )
        np.testing.assert_allclose(
            samples[1], -np.cos(x1) * np.sin(x2) * np.cos(x3), rtol=0, atol=1e-13
        )
        np.testing.assert_allclose(samples[2], 0.0, rtol=0, atol=1e-13)

    def test_abc_energy_and_beltrami_property(self, grid16):
        u = generate_ic(InitialConditionSpec(kind=InitialConditionKind.ABC), grid16)
        assert energy(u) == pytest.approx(3.0, rel=1e-14)
        assert l2_norm(curl(u, grid16) - TWO_PI * u) <= 1e-12

    def test_abc_amplitudes(self, grid16):
        spec = InitialConditionSpec(kind=InitialConditionKind.ABC, A=1.0, B=0.5, C=0.0)
        u = generate_ic(spec, grid16)
        assert energy(u) == pytest.approx(1.0 + 0.25, rel=1e-14)

    def test_shear_profile(self, grid16):
        spec = InitialConditionSpec(kind=InitialConditionKind.SHEAR, modes=2)
        u = generate_ic(spec, grid16)
        assert energy(u) == pytest.approx(0.625, rel=1e-14)
        samples = inverse_transform(u, grid16)
        x3 = grid16.points[2] * TWO_PI
        expected = np.sin(x3) + 0.5 * np.sin(2.0 * x3)
        np.testing.assert_allclose(samples[0], expected, rtol=0, atol=1e-13)
        assert np.all(u[1:] == 0.0)

    def test_shear_beyond_band_limit(self, grid16):
        spec = InitialConditionSpec(kind=InitialConditionKind.SHEAR, modes=6)
        with pytest.raises(BandLimitError):
            generate_ic(spec, grid16)


class TestRandomSolenoidal:
    def test_unit_energy(self, random_field16):
        assert energy(random_field16) == pytest.approx(1.0, rel=1e-12)

    def test_same_seed_is_deterministic(self, grid16, random_field16):
        spec = InitialConditionSpec(kind=InitialConditionKind.RANDOM_SOLENOIDAL, seed=7)
        assert np.array_equal(generate_ic(spec, grid16), random_field16)

    def test_seed_changes_field(self, grid16, random_field16):
        spec = InitialConditionSpec(kind=InitialConditionKind.RANDOM_SOLENOIDAL, seed=8)
        assert not np.array_equal(generate_ic(spec, grid16), random_field16)

    def test_peak_beyond_band_limit(self, grid8):
        spec = InitialConditionSpec(kind=InitialConditionKind.RANDOM_SOLENOIDAL, k0=4.0)
        with pytest.raises(BandLimitError):
            generate_ic(spec, grid8)

    def test_samples_are_real(self, random_field16, grid16):
        samples = inverse_transform(random_field16, grid16)
        assert samples.dtype == np.float64


class TestInitialConditionSpec:
    def test_kind_from_string(self):
        assert InitialConditionSpec(kind="abc").kind == InitialConditionKind.ABC

    def test_rejects_unknown_keys(self):
        with pytest.raises(ValidationError):
            InitialConditionSpec(amplitude=2.0)

    def test_rejects_invalid_modes(self):
        with pytest.raises(ValidationError):
            InitialConditionSpec(kind="shear", modes=0)

    def test_works_on_other_grids(self):
        u = generate_ic(InitialConditionSpec(), Grid(8))
        assert energy(u) == pytest.approx(0.25, abs=1e-15)

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unruh_doppler.errors import ConvergenceError, DomainError
from unruh_doppler.field_correlators import (
    DEFAULT_GRID,
    ModeGrid,
    SpectralDensity,
    accelerated_density_from_modes,
    accelerated_vacuum_density,
    check_resolution,
    continuum_kernel_weight,
    delta_kernel,
    density_table,
    kernel_weight,
    thermal_density,
)
from unruh_doppler.kinematics import AcceleratedWorldline
from unruh_doppler.spectra import DEFAULT_REGULARIZATION, Statistics
from unruh_doppler.units import SI, unruh_temperature

BE, FD = Statistics.BE, Statistics.FD
W = AcceleratedWorldline(1.0)
# 2 / (e^{2 pi} -+ 1)
BE_DENSITY_AT_ONE = 0.0037418731973212892
FD_DENSITY_AT_ONE = 0.0037279237792500566


def brute_force_kernel(delta, w, grid):
    """Sum every mode of both directions explicitly."""
    x = grid.x_nodes()
    D = delta / w.rapidity_rate
    total = 0j
    for eps in (1, -1):
        total += np.sum(np.exp(1j * eps * x * D))
    return grid.volume / (2 * math.pi * w.consts.c) * grid.spacing * total


def test_grid_geometry():
    g = ModeGrid(-2.0, 6.0, 8, 3.0)
    assert g.x_range == 8.0 and g.spacing == 1.0 and g.x_center == 2.0
    np.testing.assert_allclose(g.x_nodes(), np.arange(8) - 1.5)
    np.testing.assert_allclose(g.omegas(AcceleratedWorldline(2.0)), 2.0 * np.exp(g.x_nodes()))


def test_grid_from_frequencies():
    w = AcceleratedWorldline(2.0)
    g = ModeGrid.from_frequencies(0.02, 200.0, 64, 1.0, w)
    assert g.x_min == pytest.approx(math.log(0.01)) and g.x_max == pytest.approx(math.log(100.0))


@pytest.mark.parametrize("args", [(1.0, 0.0, 8, 1.0), (0.0, 1.0, 1, 1.0), (0.0, 1.0, 8, 0.0)])
def test_grid_validation(args):
    with pytest.raises(DomainError):
        ModeGrid(*args)


def test_spectral_density_validation():
    with pytest.raises(DomainError):
        SpectralDensity((1.0, 2.0), (1.0,), "thermal")
    with pytest.raises(DomainError):
        SpectralDensity((1.0,), (-1.0,), "thermal")
    with pytest.raises(DomainError):
        SpectralDensity((1.0,), (1.0,), "other")


def test_thermal_density_values():
    T = 1.0 / (2 * math.pi)
    assert thermal_density(1.0, T) == pytest.approx(BE_DENSITY_AT_ONE, rel=1e-14)
    # Rayleigh-Jeans limit: 2 hbar c k T / (hbar Omega^2)
    assert thermal_density(1e-4, 1.0) == pytest.approx(2 / 1e-8, rel=1e-4)
    values = [thermal_density(om, T) for om in np.linspace(0.5, 4, 30)]
    assert all(b < a for a, b in zip(values, values[1:]))


def test_thermal_density_domain():
    with pytest.raises(DomainError):
        thermal_density(0.0, 1.0)
    with pytest.raises(DomainError):
        thermal_density(1.0, -1.0)


def test_accelerated_density_values():
    assert accelerated_vacuum_density(1.0, W) == pytest.approx(BE_DENSITY_AT_ONE, rel=1e-14)
    assert accelerated_vacuum_density(1.0, W, FD) == pytest.approx(FD_DENSITY_AT_ONE, rel=1e-14)
    # stated rounded reference
    assert accelerated_vacuum_density(1.0, W, FD) == pytest.approx(3.72805e-3, rel=1e-4)
    assert accelerated_vacuum_density(1.0, W, FD, omega_k=2.0) == pytest.approx(FD_DENSITY_AT_ONE / 2, rel=1e-14)


@settings(max_examples=50)
@given(st.floats(1e-3, 50.0), st.floats(1e-2, 1e20))
def test_thermalization_identity(nu, a):
    w = AcceleratedWorldline(a, SI)
    T = unruh_temperature(a, SI)
    Omega = nu * a / SI.c
    lhs = accelerated_vacuum_density(Omega, w)
    rhs = thermal_density(Omega, T, SI)
    assert lhs == pytest.approx(rhs, rel=1e-13)


def test_density_table():
    table = density_table([0.5, 1.0], "thermal", W)
    assert table.kind == "thermal" and table.values[1] == pytest.approx(BE_DENSITY_AT_ONE, rel=1e-14)
    acc = density_table([0.5, 1.0], "accelerated_vacuum", W, FD)
    assert acc.statistics is FD
    with pytest.raises(DomainError):
        density_table([1.0], "nope", W)


# --- kernel ---------------------------------------------------------------------


def test_kernel_at_zero_is_constant_riemann_sum():
    g = DEFAULT_GRID
    assert delta_kernel(0.0, W, g).real == pytest.approx(g.volume / math.pi * g.x_range, rel=1e-10)


@pytest.mark.parametrize("grid", [ModeGrid(-3.0, 5.0, 200, 2.0), ModeGrid(-8.0, 8.0, 4096, 1.0)])
def test_kernel_matches_brute_force_sum(grid):
    w = AcceleratedWorldline(2.5)
    deltas = np.array([0.0, 1e-9, 0.013, 0.7, -2.2, 9.0, 2 * math.pi * 2.5 / grid.spacing])
    closed = delta_kernel(deltas, w, grid)
    brute = np.array([brute_force_kernel(d, w, grid) for d in deltas])
    np.testing.assert_allclose(closed, brute, rtol=1e-9, atol=1e-9 * abs(brute[0]))


def test_kernel_is_real_and_even():
    d = np.linspace(-3, 3, 13)
    k = delta_kernel(d, W)
    assert np.all(k.imag == 0)
    np.testing.assert_allclose(k, k[::-1], rtol=1e-12)


@pytest.mark.parametrize("name, f, rel", [
    ("gaussian", lambda d: np.exp(-0.5 * (d / 2.0) ** 2), 1e-10),
    ("lorentzian", lambda d: 1.0 / (1.0 + (d / 2.0) ** 2), 1e-3),
    ("bump", lambda d: np.where(np.abs(d) < 6.0, np.exp(1.0 - 1.0 / np.maximum(1e-300, 1.0 - (d / 6.0) ** 2)),
                                0.0), 1e-3),
])
def test_kernel_weight_is_delta(name, f, rel):
    weight = kernel_weight(f, W)
    assert weight == pytest.approx(continuum_kernel_weight(W, DEFAULT_GRID) * f(0.0), rel=rel)


def test_continuum_weight_units():
    g = ModeGrid(volume=3.0)
    w = AcceleratedWorldline(9.81, SI)
    assert continuum_kernel_weight(w, g) == pytest.approx(2 * 3.0 * 9.81 / SI.c**2, rel=1e-15)


def test_kernel_sharpens_with_range():
    # a narrower test function is resolved better as the x range grows
    f = lambda d: 1.0 / (1.0 + (d / 0.5) ** 2)  # noqa: E731
    errs = []
    for x_range in (8.0, 12.0, 16.0):
        g = ModeGrid(-x_range / 2, x_range / 2, 4096)
        errs.append(abs(kernel_weight(f, W, g) / continuum_kernel_weight(W, g) - 1))
    assert errs[0] > errs[1] > errs[2]


def test_resolution_check():
    check_resolution(DEFAULT_GRID, 1.0, 12.0)
    with pytest.raises(ConvergenceError):
        check_resolution(ModeGrid(-2.0, 2.0, 4096), 1.0, 12.0)
    with pytest.raises(ConvergenceError):
        check_resolution(ModeGrid(-8.0, 8.0, 16), 1.0, 12.0)


# --- mode-sum density ---------------------------------------------------------------


@pytest.mark.parametrize("stats", [BE, FD])
@pytest.mark.parametrize("nu", [0.5, 1.0, 2.0])
def test_mode_sum_matches_closed_form(stats, nu):
    modes = accelerated_density_from_modes(nu, W, stats=stats)
    assert modes == pytest.approx(accelerated_vacuum_density(nu, W, stats), rel=1e-10)


def test_mode_sum_with_quadrature_amplitudes():
    for stats in (BE, FD):
        modes = accelerated_density_from_modes(1.0, W, stats=stats, reg=DEFAULT_REGULARIZATION)
        assert modes == pytest.approx(accelerated_vacuum_density(1.0, W, stats), rel=1e-4)


def test_mode_sum_physical_units():
    w = AcceleratedWorldline(9.81e16, SI)
    Omega = w.rapidity_rate
    g = ModeGrid(volume=7.0)
    assert accelerated_density_from_modes(Omega, w, g) == pytest.approx(accelerated_vacuum_density(Omega, w),
                                                                        rel=1e-10)


@pytest.mark.parametrize("x_range", [8.0, 12.0, 16.0])
def test_mode_sum_x_range_sweep(x_range):
    g = ModeGrid(-x_range / 2, x_range / 2, 4096)
    assert accelerated_density_from_modes(1.0, W, g) == pytest.approx(accelerated_vacuum_density(1.0, W),
                                                                      rel=1e-2)


def test_mode_sum_error_does_not_grow_with_modes():
    errs = []
    for n in (512, 1024, 2048, 4096):
        g = ModeGrid(-8.0, 8.0, n)
        errs.append(abs(accelerated_density_from_modes(1.0, W, g) / accelerated_vacuum_density(1.0, W) - 1))
    assert all(b <= a * 1.01 + 1e-14 for a, b in zip(errs, errs[1:]))
    assert errs[-1] < 1e-10


def test_mode_sum_rejects_coarse_grid():
    with pytest.raises(ConvergenceError):
        accelerated_density_from_modes(1.0, W, ModeGrid(-1.0, 1.0, 4096))

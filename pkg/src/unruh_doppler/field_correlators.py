"""Frequency-domain field correlations for inertial-thermal and accelerated-vacuum observers.

For a massless scalar field in one dimension, quantized in a box of length
V, the correlation <g^dag(Omega) g(Omega')> of the Fourier-transformed field
is proportional to delta(Omega - Omega'). This module computes the
coefficient of that delta function (the spectral density):

* for an inertial observer in a thermal state at temperature T;
* for a uniformly accelerated observer in the vacuum, in closed form;
* for the accelerated observer by summing a finite, log-uniform set of
  modes, where the delta function emerges from the mode sum as a
  Dirichlet-type kernel.

Creation/annihilation operators are not represented. Their only
computational trace is that each mode contributes exactly one quantum
(commutator or anticommutator gives 1), which is built into the mode sum.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial.legendre import leggauss

from .errors import ConvergenceError, DomainError
from .kinematics import AcceleratedWorldline, PlaneWaveMode
from .spectra import RegularizationConfig, Statistics, numeric_spectrum, planck_factor
from .special_fns import gamma_abs2
from .units import NATURAL, PhysicalConstants, unruh_temperature


@dataclass(frozen=True)
class ModeGrid:
    """Log-uniform set of mode frequencies, n_modes per propagation direction.

    Modes sit at the midpoints of n_modes equal cells in
    x = log(omega c / a) on [x_min, x_max]. ``volume`` is the box length.
    """

    x_min: float = -8.0
    x_max: float = 8.0
    n_modes: int = 4096
    volume: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.x_min) and math.isfinite(self.x_max) and self.x_min < self.x_max):
            raise DomainError("ModeGrid needs finite x_min < x_max")
        if self.n_modes < 2:
            raise DomainError("ModeGrid needs at least two modes per direction")
        if not (self.volume > 0 and math.isfinite(self.volume)):
            raise DomainError("box volume must be positive")

    @classmethod
    def from_frequencies(cls, omega_min, omega_max, n_modes, volume, w: AcceleratedWorldline):
        if not 0 < omega_min < omega_max:
            raise DomainError("need 0 < omega_min < omega_max")
        scale = 1.0 / w.rapidity_rate
        return cls(math.log(omega_min * scale), math.log(omega_max * scale), n_modes, volume)

    @property
    def x_range(self) -> float:
        return self.x_max - self.x_min

    @property
    def spacing(self) -> float:
        return self.x_range / self.n_modes

    @property
    def x_center(self) -> float:
        return 0.5 * (self.x_min + self.x_max)

    def x_nodes(self):
        return self.x_min + (np.arange(self.n_modes) + 0.5) * self.spacing

    def omegas(self, w: AcceleratedWorldline):
        return w.rapidity_rate * np.exp(self.x_nodes())


DEFAULT_GRID = ModeGrid()


@dataclass(frozen=True)
class SpectralDensity:
    grid: tuple[float, ...]
    values: tuple[float, ...]
    kind: str
    statistics: Statistics = Statistics.BE

    def __post_init__(self):
        if len(self.grid) != len(self.values):
            raise DomainError("grid and values must have the same length")
        if any(v < 0 for v in self.values):
            raise DomainError("spectral density values must be non-negative")
        if self.kind not in ("thermal", "accelerated_vacuum"):
            raise DomainError(f"unknown density kind {self.kind!r}")


def thermal_density(Omega, T, consts: PhysicalConstants = NATURAL, stats: Statistics = Statistics.BE) -> float:
    """(2 hbar c / Omega) / (exp(hbar Omega / k T) - 1) for an inertial observer in a thermal field.

    ``stats=FD`` swaps in the Fermi-Dirac occupation.
    """
    if not (math.isfinite(Omega) and Omega > 0):
        raise DomainError(f"Omega must be finite and positive, got {Omega!r}")
    if not (math.isfinite(T) and T > 0):
        raise DomainError(f"temperature must be finite and positive, got {T!r}")
    x = consts.hbar * Omega / (consts.k_boltzmann * T)
    return 2.0 * consts.hbar * consts.c / Omega * planck_factor(x, stats)


def accelerated_vacuum_density(Omega, w: AcceleratedWorldline, stats: Statistics = Statistics.BE,
                               omega_k=None) -> float:
    """Closed-form density seen by the accelerated observer in the vacuum.

    BE: (2 hbar c / Omega) / (exp(2 pi Omega c / a) - 1)
    FD: (2 hbar c / omega_K) / (exp(2 pi Omega c / a) + 1), with omega_K = Omega
    unless given.
    """
    if not (math.isfinite(Omega) and Omega > 0):
        raise DomainError(f"Omega must be finite and positive, got {Omega!r}")
    consts = w.consts
    x = 2.0 * math.pi * Omega / w.rapidity_rate
    if stats is Statistics.BE:
        freq = Omega
    else:
        freq = Omega if omega_k is None else omega_k
        if not (math.isfinite(freq) and freq > 0):
            raise DomainError("omega_k must be finite and positive")
    return 2.0 * consts.hbar * consts.c / freq * planck_factor(x, stats)


def density_table(omegas, kind, w: AcceleratedWorldline, stats: Statistics = Statistics.BE) -> SpectralDensity:
    """Tabulate the thermal (at the matching temperature) or accelerated-vacuum density."""
    if kind == "thermal":
        T = unruh_temperature(w.a, w.consts)
        values = [thermal_density(om, T, w.consts, stats) for om in omegas]
    elif kind == "accelerated_vacuum":
        values = [accelerated_vacuum_density(om, w, stats) for om in omegas]
    else:
        raise DomainError(f"unknown density kind {kind!r}")
    return SpectralDensity(tuple(float(o) for o in omegas), tuple(values), kind, stats)


# --- the mode sum over K ---------------------------------------------------


def delta_kernel(delta_omega, w: AcceleratedWorldline, grid: ModeGrid = DEFAULT_GRID):
    """Finite mode sum  sum_K (1/omega_K) (omega_K c/a)^(i eps_K (Omega - Omega') c/a).

    Each log-uniform cell stands for (V / 2 pi c) dx modes-per-frequency
    weight, so the sum over one direction is the midpoint Riemann sum of
    (V / 2 pi c) int dx exp(i eps x D), D = (Omega - Omega') c / a. Both
    directions together give a real Dirichlet kernel, evaluated in closed form:

        (V / pi c) dx cos(x_c D) sin(n dx D / 2) / sin(dx D / 2)

    Accepts scalars or arrays; returns complex.
    """
    c = w.consts.c
    D = np.asarray(delta_omega, dtype=float) / w.rapidity_rate
    half = 0.5 * grid.spacing * D
    sin_half = np.sin(half)
    small = np.abs(sin_half) < 1e-12
    ratio = np.where(small, grid.n_modes * np.cos(grid.n_modes * half) / np.where(small, np.cos(half), 1.0),
                     np.sin(grid.n_modes * half) / np.where(small, 1.0, sin_half))
    value = grid.volume / (math.pi * c) * grid.spacing * np.cos(grid.x_center * D) * ratio
    return value.astype(complex) if np.ndim(value) else complex(value)


def kernel_weight(test_fn, w: AcceleratedWorldline, grid: ModeGrid = DEFAULT_GRID, support=20.0, panel=0.05):
    """int d(Delta Omega) delta_kernel(Delta Omega) f(Delta Omega) over |Delta Omega| <= support a/c.

    ``test_fn`` takes Delta Omega in the same units as ``w``'s frequencies.
    For a smooth f much wider than the kernel, the result approaches
    (2 V a / c^2) f(0).
    """
    scale = w.rapidity_rate
    n_panels = max(1, int(math.ceil(2.0 * support / panel)))
    edges = np.linspace(-support, support, n_panels + 1)
    x, wts = leggauss(16)
    mid = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1:] - edges[:-1])
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * wts[None, :]).ravel()
    delta = nodes * scale
    integrand = np.real(delta_kernel(delta, w, grid)) * np.asarray(test_fn(delta), dtype=float)
    return float(np.sum(integrand * weights)) * scale


def continuum_kernel_weight(w: AcceleratedWorldline, grid: ModeGrid) -> float:
    """2 V a / c^2: the delta-function weight of the mode sum in the continuum limit."""
    return 2.0 * grid.volume * w.a / w.consts.c**2


def check_resolution(grid: ModeGrid, window_width: float, support: float):
    """Raise ConvergenceError unless the grid resolves a Gaussian window of the given width.

    ``window_width`` and ``support`` are in units of a/c. The Fourier image of the
    window has width 1/window_width in x; it must fit inside [x_min, x_max],
    and the kernel's period 2 pi / dx must exceed the integration span.
    """
    reach = min(-grid.x_min, grid.x_max) * window_width
    if reach < 3.0:
        raise ConvergenceError(
            f"grid x range too narrow for the extraction window (reach {reach:.3g} < 3)", math.exp(-reach**2 / 2)
        )
    period = 2.0 * math.pi / grid.spacing
    if period < 4.0 * support:
        raise ConvergenceError(f"mode spacing too coarse: kernel period {period:.3g} vs span {2 * support:.3g}",
                               2 * support / period)


def _per_mode_intensity(Omega, w, stats, omega_k, reg):
    """|int dtau exp(i Omega tau) [spinor weight] exp(i phase)|^2 stripped of its 1/omega_K factor for FD.

    For BE this does not depend on the mode frequency. For FD the mode
    frequency is set to omega_k (default Omega).
    """
    freq = Omega if omega_k is None else omega_k
    if reg is not None:
        return numeric_spectrum(Omega, PlaneWaveMode(freq, -1), w, stats, reg)
    nu = Omega / w.rapidity_rate
    z = stats.gamma_shift + 1j * nu
    intensity = gamma_abs2(z) * math.exp(-math.pi * nu) / w.rapidity_rate**2
    if stats is Statistics.FD:
        intensity *= w.rapidity_rate / freq
    return float(intensity)


def accelerated_density_from_modes(Omega, w: AcceleratedWorldline, grid: ModeGrid = DEFAULT_GRID,
                                   stats: Statistics = Statistics.BE, reg: RegularizationConfig | None = None,
                                   omega_k=None, window_width=1.0) -> float:
    """Accelerated-vacuum density assembled mode by mode.

    Each mode contributes (2 pi hbar c^2 / (omega_K V)) (1/2pi)^2 |amplitude|^2
    times the phase factor (omega_K c/a)^(i eps_K (Omega - Omega') c/a). The
    amplitudes come from the Gamma function, or from the damped quadrature
    of :mod:`spectra` when ``reg`` is given. The delta-function weight of
    the finite mode sum is read off by smearing the kernel with a unit-height
    Gaussian of width ``window_width`` a/c.
    """
    if not (math.isfinite(Omega) and Omega > 0):
        raise DomainError(f"Omega must be finite and positive, got {Omega!r}")
    support = 12.0 * window_width
    check_resolution(grid, window_width, support)
    consts = w.consts
    intensity = _per_mode_intensity(Omega, w, stats, omega_k, reg)
    width = window_width * w.rapidity_rate

    def window(delta):
        return np.exp(-0.5 * (delta / width) ** 2)

    weight = kernel_weight(window, w, grid, support=support)
    prefactor = 2.0 * math.pi * consts.hbar * consts.c**2 / grid.volume / (2.0 * math.pi) ** 2
    return prefactor * intensity * weight

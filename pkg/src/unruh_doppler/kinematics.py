"""Hyperbolic worldline of a uniformly accelerated observer.

All functions accept scalars or numpy arrays for the time argument and are
parameterized primarily by proper time ``tau``. The observer starts at rest
at t = 0 and accelerates along +z.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .units import NATURAL, PhysicalConstants


@dataclass(frozen=True)
class AcceleratedWorldline:
    a: float
    consts: PhysicalConstants = NATURAL

    def __post_init__(self):
        if not (math.isfinite(self.a) and self.a > 0):
            raise DomainError(f"proper acceleration must be finite and positive, got {self.a!r}")

    @property
    def rapidity_rate(self) -> float:
        """a/c, the rate at which rapidity grows with proper time."""
        return self.a / self.consts.c

    @property
    def length_scale(self) -> float:
        """c**2/a, the distance of the hyperbola vertex from the origin."""
        return self.consts.c**2 / self.a


@dataclass(frozen=True)
class PlaneWaveMode:
    """Minkowski plane wave with angular frequency ``omega`` moving along ``direction`` * z."""

    omega: float
    direction: int = -1

    def __post_init__(self):
        if not (math.isfinite(self.omega) and self.omega > 0):
            raise DomainError(f"mode frequency must be finite and positive, got {self.omega!r}")
        if self.direction not in (1, -1):
            raise DomainError(f"direction must be +1 or -1, got {self.direction!r}")

    def wavenumber(self, consts: PhysicalConstants = NATURAL) -> float:
        return self.direction * self.omega / consts.c


def lab_velocity_of_lab_time(t, w: AcceleratedWorldline):
    """v(t) = a t / sqrt(1 + (a t / c)**2)."""
    at = w.a * np.asarray(t, dtype=float)
    return at / np.sqrt(1.0 + (at / w.consts.c) ** 2)


def lab_velocity_of_proper_time(tau, w: AcceleratedWorldline):
    return w.consts.c * np.tanh(w.rapidity_rate * np.asarray(tau, dtype=float))


def worldline_point(tau, w: AcceleratedWorldline):
    """Lab coordinates (t, z) of the observer at proper time ``tau``."""
    eta = w.rapidity_rate * np.asarray(tau, dtype=float)
    t = np.sinh(eta) / w.rapidity_rate
    z = w.length_scale * np.cosh(eta)
    return t, z


def doppler_frequency(tau, mode: PlaneWaveMode, w: AcceleratedWorldline):
    """Frequency of ``mode`` in the instantaneous rest frame: omega * exp(-direction * a tau / c)."""
    eta = w.rapidity_rate * np.asarray(tau, dtype=float)
    return mode.omega * np.exp(-mode.direction * eta)


def doppler_phase(tau, mode: PlaneWaveMode, w: AcceleratedWorldline):
    """Phase (omega c/a) * exp(-direction * a tau / c) accumulated by ``mode``.

    This equals (omega/c) z(tau) - direction * omega t(tau) on the worldline
    and is always positive. Its proper-time derivative is
    ``-direction * doppler_frequency``.
    """
    eta = w.rapidity_rate * np.asarray(tau, dtype=float)
    return mode.omega / w.rapidity_rate * np.exp(-mode.direction * eta)

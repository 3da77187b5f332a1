"""Unruh temperature from time-dependent Doppler shifts.

A uniformly accelerated observer moving through the vacuum sees each plane
wave with an exponentially drifting frequency. The resulting spectrum is a
Planck (scalar field) or Fermi-Dirac (spinor field) spectrum at the
temperature hbar a / (2 pi k c). This package evaluates that spectrum in
closed form and by direct quadrature, builds the field correlation
densities from a finite mode sum, and computes the response of a narrow
oscillator detector.
"""
from .errors import ConvergenceError, DomainError
from .kinematics import AcceleratedWorldline, PlaneWaveMode
from .spectra import RegularizationConfig, Statistics
from .units import NATURAL, SI, PhysicalConstants, unruh_temperature

__all__ = [
    "AcceleratedWorldline",
    "ConvergenceError",
    "DomainError",
    "NATURAL",
    "PhysicalConstants",
    "PlaneWaveMode",
    "RegularizationConfig",
    "SI",
    "Statistics",
    "unruh_temperature",
]

__version__ = "0.1.0"

"""Physical constants, unit systems and the acceleration temperature.

Two constant sets are provided: CODATA 2018 SI values and natural units
(hbar = c = k = 1). Everything downstream takes a :class:`PhysicalConstants`
so the same code runs in either system.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class PhysicalConstants:
    hbar: float
    c: float
    k_boltzmann: float
    G: float
    natural: bool = False

    def __post_init__(self):
        for name in ("hbar", "c", "k_boltzmann", "G"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise DomainError(f"{name} must be finite and positive, got {value!r}")

    @classmethod
    def codata2018(cls) -> "PhysicalConstants":
        # hbar, c, k are exact in the 2019 SI; G is the CODATA 2018 recommended value
        return cls(hbar=1.054571817e-34, c=299792458.0, k_boltzmann=1.380649e-23,
                   G=6.67430e-11)

    @classmethod
    def natural_units(cls) -> "PhysicalConstants":
        # G is not used in natural mode, it only has to be a valid positive number
        return cls(hbar=1.0, c=1.0, k_boltzmann=1.0, G=1.0, natural=True)


SI = PhysicalConstants.codata2018()
NATURAL = PhysicalConstants.natural_units()

# name -> (mass kg, radius m); radius None means "use the Schwarzschild radius"
BODIES = {
    "earth": (5.9722e24, 6.3781e6),     # IAU 2015 nominal equatorial radius
    "sun": (1.98892e30, 6.957e8),       # IAU 2015 nominal photospheric radius
    "black_hole": (1.98892e30, None),   # one solar mass
}


def _require_positive(name, value):
    if not (math.isfinite(value) and value > 0):
        raise DomainError(f"{name} must be finite and positive, got {value!r}")


def unruh_temperature(a: float, consts: PhysicalConstants = SI) -> float:
    """Temperature hbar*a / (2*pi*k*c) seen by an observer with proper acceleration ``a``."""
    _require_positive("acceleration", a)
    return consts.hbar * a / (2.0 * math.pi * consts.k_boltzmann * consts.c)


def acceleration_for_temperature(T: float, consts: PhysicalConstants = SI) -> float:
    """Inverse of :func:`unruh_temperature`."""
    _require_positive("temperature", T)
    return 2.0 * math.pi * consts.k_boltzmann * consts.c * T / consts.hbar


def surface_gravity(M: float, r: float, consts: PhysicalConstants = SI) -> float:
    """Newtonian acceleration G*M/r**2."""
    _require_positive("mass", M)
    _require_positive("radius", r)
    return consts.G * M / r**2


def schwarzschild_radius(M: float, consts: PhysicalConstants = SI) -> float:
    _require_positive("mass", M)
    return 2.0 * consts.G * M / consts.c**2


@dataclass(frozen=True)
class ExerciseRow:
    body: str
    mass: float
    radius: float
    acceleration: float
    temperature: float


def exercise_table(consts: PhysicalConstants = SI) -> list[ExerciseRow]:
    """Acceleration temperature at the surface of the Earth, the Sun and a solar-mass black hole.

    The black hole "surface" is its Schwarzschild radius and the acceleration
    there is taken Newtonian, G*M/r_s**2.
    """
    if consts.natural:
        raise DomainError("the surface-gravity table needs SI constants")
    rows = []
    for body, (mass, radius) in BODIES.items():
        if radius is None:
            radius = schwarzschild_radius(mass, consts)
        a = surface_gravity(mass, radius, consts)
        rows.append(ExerciseRow(body, mass, radius, a, unruh_temperature(a, consts)))
    return rows

"""Steady-state response of a damped oscillator coupled to the field.

With a correlation proportional to delta(Omega - Omega') the detector's
double frequency integral collapses to a single Lorentzian-weighted
integral over the spectral density S(Omega). The density is converted to an
occupation number n(Omega) = Omega S(Omega) / (2 hbar c), so the result is
in units of hbar omega0 and tends to n(omega0) as the linewidth shrinks.

The Lorentzian is cut at omega0 +- 30 gamma and renormalized over that band.
A fixed kernel shape in units of gamma makes the response an even
polynomial in gamma, which :func:`narrowband_occupation` extrapolates to
gamma = 0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from scipy import integrate

from .errors import ConvergenceError, DomainError
from .field_correlators import accelerated_vacuum_density, thermal_density
from .kinematics import AcceleratedWorldline
from .spectra import Statistics, neville
from .units import NATURAL, PhysicalConstants

BAND_HALF_WIDTH = 30.0


@dataclass(frozen=True)
class DetectorParams:
    omega0: float
    gamma: float

    def __post_init__(self):
        if not (math.isfinite(self.omega0) and self.omega0 > 0):
            raise DomainError("omega0 must be finite and positive")
        if not (0 < self.gamma < self.omega0 / 5):
            raise DomainError("the narrowband detector needs 0 < gamma < omega0 / 5")


def thermal_source(T, consts: PhysicalConstants = NATURAL):
    """Density callable for an inertial observer in a thermal field."""
    return lambda Omega: thermal_density(Omega, T, consts)


def accelerated_source(w: AcceleratedWorldline, stats: Statistics = Statistics.BE):
    """Density callable for the accelerated observer in the vacuum."""
    return lambda Omega: accelerated_vacuum_density(Omega, w, stats)


def lorentzian_weight(Omega, p: DetectorParams):
    return p.gamma / math.pi / ((Omega - p.omega0) ** 2 + p.gamma**2)


def steady_state_energy(p: DetectorParams, density, consts: PhysicalConstants = NATURAL,
                        band=(0.0, math.inf), rel_tol=1e-8) -> float:
    """Mean detector energy in units of hbar omega0.

    ``density`` maps Omega to S(Omega); ``band`` is the frequency interval on
    which it is defined.
    """
    lo = p.omega0 - BAND_HALF_WIDTH * p.gamma
    hi = p.omega0 + BAND_HALF_WIDTH * p.gamma
    if lo <= band[0] or hi > band[1]:
        raise DomainError(
            f"density band {band} does not cover [{lo:.6g}, {hi:.6g}] (omega0 +- {BAND_HALF_WIDTH:g} gamma)"
        )
    to_occupation = 1.0 / (2.0 * consts.hbar * consts.c)

    def integrand(Omega):
        return lorentzian_weight(Omega, p) * Omega * density(Omega) * to_occupation

    value, abserr = integrate.quad(integrand, lo, hi, points=[p.omega0], epsrel=rel_tol, epsabs=0.0, limit=200)
    if abserr > 10 * rel_tol * abs(value):
        raise ConvergenceError(f"detector integral error {abserr:.3g} too large", abserr / abs(value))
    mass = 2.0 / math.pi * math.atan(BAND_HALF_WIDTH)
    return value / mass


def narrowband_occupation(p: DetectorParams, density, consts: PhysicalConstants = NATURAL,
                          band=(0.0, math.inf), n_levels=4) -> float:
    """gamma -> 0 limit of :func:`steady_state_energy`, starting from ``p.gamma`` and halving.

    Richardson extrapolation in gamma^2. Raises ConvergenceError if the
    successive estimates stop improving.
    """
    gammas = [p.gamma / 2**k for k in range(n_levels)]
    energies = [steady_state_energy(DetectorParams(p.omega0, g), density, consts, band) for g in gammas]
    xs = [g * g for g in gammas]
    estimates = [neville(xs[: k + 1], energies[: k + 1]).real for k in range(n_levels)]
    best = estimates[-1]
    steps = [abs(b - a) for a, b in zip(estimates, estimates[1:])]
    noise = 1e-7 * abs(best)
    for earlier, later in zip(steps, steps[1:]):
        if later > earlier and later > noise:
            raise ConvergenceError(f"gamma -> 0 extrapolation not converging (steps {steps})", later)
    return best

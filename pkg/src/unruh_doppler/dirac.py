"""Dirac-basis gamma matrices and the proper-time boost of a bispinor.

Matrices and bispinors are plain complex numpy arrays of shape (4, 4) and
(4,). The boost generator gamma0 @ gamma3 is real symmetric with
eigenvalues {+1, +1, -1, -1}; a bispinor in the +1 eigenspace (such as the
spin-up state [1, 0, 1, 0]) picks up the weight exp(a tau / 2c).
"""
from __future__ import annotations

import math

import numpy as np

from .errors import DomainError
from .kinematics import AcceleratedWorldline

SIGMA_Z = np.diag([1.0, -1.0]).astype(complex)
_ZERO2 = np.zeros((2, 2), dtype=complex)
_I2 = np.eye(2, dtype=complex)
IDENTITY = np.eye(4, dtype=complex)

SPIN_UP = np.array([1, 0, 1, 0], dtype=complex)
# the same spin in the other eigenspace of gamma0 gamma3; weight exp(-a tau / 2c)
SPIN_UP_MIRROR = np.array([1, 0, -1, 0], dtype=complex)

EIGEN_RESIDUAL_TOL = 1e-10


def gamma0():
    return np.block([[_I2, _ZERO2], [_ZERO2, -_I2]])


def gamma3():
    return np.block([[_ZERO2, SIGMA_Z], [-SIGMA_Z, _ZERO2]])


def boost_generator():
    """gamma0 @ gamma3."""
    return gamma0() @ gamma3()


def boost_matrix(tau, w: AcceleratedWorldline):
    """S(tau) = exp(gamma0 gamma3 a tau / 2c) = cosh(a tau/2c) I + gamma0 gamma3 sinh(a tau/2c).

    The closed form holds because (gamma0 gamma3)^2 = I.
    """
    half_rapidity = 0.5 * w.rapidity_rate * float(tau)
    return math.cosh(half_rapidity) * IDENTITY + math.sinh(half_rapidity) * boost_generator()


def apply_boost(spinor, tau, w: AcceleratedWorldline):
    return boost_matrix(tau, w) @ np.asarray(spinor, dtype=complex)


def boost_eigenvalue(spinor) -> int:
    """Return +1 or -1 if ``spinor`` is an eigenvector of gamma0 gamma3, else raise DomainError."""
    s = np.asarray(spinor, dtype=complex)
    if s.shape != (4,):
        raise DomainError(f"a bispinor has 4 components, got shape {s.shape}")
    norm = np.linalg.norm(s)
    if norm == 0 or not np.isfinite(norm):
        raise DomainError("bispinor must be finite and non-zero")
    image = boost_generator() @ s
    residuals = {lam: np.linalg.norm(image - lam * s) / norm for lam in (1, -1)}
    lam = min(residuals, key=residuals.get)
    if residuals[lam] > EIGEN_RESIDUAL_TOL:
        raise DomainError(
            f"bispinor is not an eigenvector of gamma0 gamma3 (residual {residuals[lam]:.3g})"
        )
    return lam


def spinor_scale_factor(spinor, tau, w: AcceleratedWorldline):
    """Factor exp(lam a tau / 2c) by which S(tau) rescales an eigen-bispinor.

    This is the weight carried into the Fermi-Dirac spectrum integrand.
    """
    lam = boost_eigenvalue(spinor)
    return np.exp(0.5 * lam * w.rapidity_rate * np.asarray(tau, dtype=float))

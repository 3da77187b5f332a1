"""Complex log-gamma and the two |Gamma|^2 identities on vertical lines.

``log_gamma_complex`` uses upward recurrence to Re z >= 15 followed by the
Stirling series. Accuracy is about 1e-14 absolute in log Gamma across
|z| in [0.1, 50]; the tests check it against the closed forms

    |Gamma(i x)|^2       = pi / (x sinh(pi x))
    |Gamma(1/2 + i x)|^2 = pi / cosh(pi x)
"""
from __future__ import annotations

import math

import numpy as np

from .errors import DomainError

_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
_SHIFT_TARGET = 15.0
# B_2k / (2k (2k - 1)), k = 1..8
_STIRLING = np.array([
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
])
_LOG_SPACE_ABOVE = 50.0


def _stirling(z):
    inv = 1.0 / z
    inv2 = inv * inv
    series = np.zeros_like(z)
    for coef in _STIRLING[::-1]:
        series = series * inv2 + coef
    return (z - 0.5) * np.log(z) - z + _HALF_LOG_2PI + series * inv


def log_gamma_complex(z):
    """Principal branch of log Gamma(z), analytic on the plane cut along (-inf, 0].

    Accepts a scalar or array; scalars come back as Python complex.
    """
    scalar = np.ndim(z) == 0
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    if not np.all(np.isfinite(z)):
        raise DomainError("log_gamma_complex needs finite arguments")
    on_pole = (z.imag == 0) & (z.real <= 0) & (z.real == np.round(z.real))
    if np.any(on_pole):
        raise DomainError(f"Gamma has a pole at {z[on_pole][0].real:g}")

    shifts = np.maximum(0, np.ceil(_SHIFT_TARGET - z.real)).astype(int)
    log_prod = np.zeros_like(z)
    for k in range(int(shifts.max(initial=0))):
        active = shifts > k
        log_prod[active] += np.log(z[active] + k)
    out = _stirling(z + shifts) - log_prod
    return complex(out[0]) if scalar else out


def gamma_abs2_imag(x):
    """|Gamma(i x)|^2 = pi / (x sinh(pi x)) for x > 0; underflows to 0 rather than NaN."""
    scalar = np.ndim(x) == 0
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if not np.all(np.isfinite(x) & (x > 0)):
        raise DomainError("gamma_abs2_imag needs finite x > 0")
    out = np.empty_like(x)
    small = x <= _LOG_SPACE_ABOVE
    xs = x[small]
    out[small] = math.pi / (xs * np.sinh(math.pi * xs))
    xl = x[~small]
    # log sinh(y) = y - log 2 + log1p(-exp(-2y))
    log_sinh = math.pi * xl - math.log(2.0) + np.log1p(-np.exp(-2.0 * math.pi * xl))
    out[~small] = np.exp(math.log(math.pi) - np.log(xl) - log_sinh)
    return float(out[0]) if scalar else out


def gamma_abs2_half_imag(x):
    """|Gamma(1/2 + i x)|^2 = pi / cosh(pi x)."""
    scalar = np.ndim(x) == 0
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if not np.all(np.isfinite(x)):
        raise DomainError("gamma_abs2_half_imag needs finite x")
    ax = np.abs(x)
    out = np.empty_like(ax)
    small = ax <= _LOG_SPACE_ABOVE
    out[small] = math.pi / np.cosh(math.pi * ax[small])
    xl = ax[~small]
    log_cosh = math.pi * xl - math.log(2.0) + np.log1p(np.exp(-2.0 * math.pi * xl))
    out[~small] = np.exp(math.log(math.pi) - log_cosh)
    return float(out[0]) if scalar else out


def gamma_abs2(z):
    """|Gamma(z)|^2 evaluated through :func:`log_gamma_complex`."""
    lg = log_gamma_complex(z)
    return np.exp(2.0 * np.real(lg))

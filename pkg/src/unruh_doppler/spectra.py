"""Frequency spectrum seen by the accelerated observer.

The observer integrates a Doppler-shifted plane wave against exp(i Omega tau)
and looks at the squared modulus of the result. Two routes are provided:

* closed form, via the Mellin transform of exp(i beta y) (a Gamma function);
* direct quadrature over proper time with a two-sided damping
  exp(-s |tau|), evaluated for a schedule of s values and extrapolated to
  s -> 0.

In dimensionless variables v = a tau / c, nu = Omega c / a and
beta = omega_K c / a, every amplitude reduces to the canonical integral

    J(nu, beta, lam; s) = int dv exp(i nu v + lam v / 2 + i beta e^v - s |v|)

with lam = 0 for a scalar field and lam = +1 for a spinor whose boost weight
is exp(a tau / 2c). A wave travelling along +z maps onto the same integral
after v -> -v. The physical amplitude is (c/a) J.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial.legendre import leggauss

from . import dirac
from .errors import ConvergenceError, DomainError
from .kinematics import AcceleratedWorldline, PlaneWaveMode
from .special_fns import log_gamma_complex


class Statistics(enum.Enum):
    BE = "be"
    FD = "fd"

    @property
    def planck_sign(self) -> int:
        """Sign in the denominator exp(x) + sign of the occupation number."""
        return -1 if self is Statistics.BE else 1

    @property
    def gamma_shift(self) -> float:
        """Real part added to i Omega c/a in the Gamma-function argument."""
        return 0.0 if self is Statistics.BE else 0.5


@dataclass(frozen=True)
class RegularizationConfig:
    """Knobs for the damped proper-time quadrature.

    ``s_schedule`` and ``tau_window`` are in units of a/c and c/a
    respectively (plain numbers in natural units with a = 1).
    """

    s_schedule: tuple[float, ...] = (0.16, 0.08, 0.04, 0.02, 0.01, 0.005)
    tau_window: float = 40.0
    quad_rel_tol: float = 1e-10
    extrapolation_order: int = 4
    extrapolation_tol: float = 1e-3
    max_refinements: int = 8

    def __post_init__(self):
        s = tuple(float(v) for v in self.s_schedule)
        object.__setattr__(self, "s_schedule", s)
        if len(s) < 2 or any(v <= 0 or not math.isfinite(v) for v in s):
            raise DomainError("s_schedule needs at least two finite positive values")
        if any(b >= a for a, b in zip(s, s[1:])):
            raise DomainError("s_schedule must be strictly decreasing")
        if not (self.tau_window > 0 and math.isfinite(self.tau_window)):
            raise DomainError("tau_window must be positive")
        if not (0 < self.quad_rel_tol < 1e-3):
            raise DomainError("quad_rel_tol must lie in (0, 1e-3)")
        if not (1 <= self.extrapolation_order <= len(s) - 1):
            raise DomainError("extrapolation_order must be between 1 and len(s_schedule) - 1")


DEFAULT_REGULARIZATION = RegularizationConfig()


@dataclass(frozen=True)
class SpectrumPoint:
    omega_rindler: float
    value: float
    amplitude: complex | None = None


def planck_factor(x, stats: Statistics):
    """1/(e^x - 1) for BE, 1/(e^x + 1) for FD."""
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"planck_factor needs a finite argument, got {x!r}")
    if stats is Statistics.BE:
        if x <= 0:
            raise DomainError("Bose-Einstein occupation needs x > 0")
        return math.exp(-x) if x > 700 else 1.0 / math.expm1(x)
    if x >= 0:
        e = math.exp(-x)
        return e / (1.0 + e)
    return 1.0 / (1.0 + math.exp(x))


# --- canonical dimensionless integral ------------------------------------

_GL_HI = leggauss(20)
_GL_LO = leggauss(10)
# the right tail is expanded asymptotically once the phase rate beta e^v passes this
_PHASE_RATE_CUTOFF = 1e3
_TAIL_TERM_TOL = 1e-17
_ROUNDOFF_LIMIT = 1e-6


def _panel_sums(lo, hi, integrand, rule):
    x, wts = rule
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    nodes = mid[:, None] + half[:, None] * x[None, :]
    vals = integrand(nodes.ravel()).reshape(-1, lo.size, x.size)
    return np.einsum("spn,n->sp", vals, wts) * half, np.einsum("spn,n->sp", np.abs(vals), wts) * half


def _adaptive_panels(edges, integrand, rel_tol, offset, max_levels, phase_scale):
    """Gauss-Legendre over panels, halving panels whose 20/10-point estimates disagree.

    ``integrand`` maps a flat node array to shape (n_s, n_nodes). ``offset``
    holds the analytic tail contributions, used only to size the tolerance.
    ``phase_scale(lo, hi)`` bounds the phase magnitude on each panel; the
    rounding error of that phase sets a per-panel error floor.
    Returns (sums, error estimate, tolerance).
    """
    eps = np.finfo(float).eps
    lo, hi = edges[:-1], edges[1:]
    length = edges[-1] - edges[0]
    q_hi, l1 = _panel_sums(lo, hi, integrand, _GL_HI)
    q_lo, _ = _panel_sums(lo, hi, integrand, _GL_LO)
    l1 = l1.max(axis=0)
    estimate = q_hi.sum(axis=1) + offset
    # rounding errors of different panels are uncorrelated: add them in quadrature
    floor = 8 * eps * (float(l1.sum()) + float(np.sqrt(np.sum((l1 * phase_scale(lo, hi)) ** 2))))
    tol = max(rel_tol * float(np.abs(estimate).min()), floor)

    sums = np.zeros(q_hi.shape[0], dtype=complex)
    err = 0.0
    for level in range(max_levels + 1):
        panel_err = np.abs(q_hi - q_lo).max(axis=0)
        roundoff = 8 * eps * l1 * (1.0 + phase_scale(lo, hi))
        ok = panel_err <= tol * (hi - lo) / length + roundoff
        if level == max_levels:
            ok[:] = True
        sums += q_hi[:, ok].sum(axis=1)
        err += float(np.maximum(panel_err[ok] - roundoff[ok], 0.0).sum())
        if ok.all():
            break
        bad_lo, bad_hi = lo[~ok], hi[~ok]
        mid = 0.5 * (bad_lo + bad_hi)
        lo = np.concatenate([bad_lo, mid])
        hi = np.concatenate([mid, bad_hi])
        order = np.argsort(lo, kind="stable")
        lo, hi = lo[order], hi[order]
        q_hi, l1 = _panel_sums(lo, hi, integrand, _GL_HI)
        q_lo, _ = _panel_sums(lo, hi, integrand, _GL_LO)
        l1 = l1.max(axis=0)
    return sums, err + floor, tol


def _left_tail(z, beta, left):
    """int_{-inf}^{left} exp(z v) exp(i beta e^v) dv by expanding exp(i beta e^v)."""
    total = np.zeros_like(z)
    coef = 1.0 + 0j
    for n in range(200):
        term = coef * np.exp((z + n) * left) / (z + n)
        total = total + term
        if n > 1 and np.abs(term).max() < _TAIL_TERM_TOL * max(1.0, np.abs(total).max()):
            return total
        coef *= 1j * beta / (n + 1)
    raise ConvergenceError("left-tail series did not converge", float(np.abs(term).max()))


def _right_tail(z, beta, right):
    """int_{right}^{inf} exp(z v) exp(i beta e^v) dv by repeated integration by parts in y = e^v."""
    m = z - 1.0
    y = math.exp(right)
    phase = np.exp(1j * beta * y)
    total = np.zeros_like(z)
    falling = np.ones_like(z)
    for k in range(40):
        term = -phase * (-1) ** k * falling * np.exp((m - k) * right) / (1j * beta) ** (k + 1)
        total = total + term
        if np.abs(term).max() < _TAIL_TERM_TOL * max(1.0, np.abs(total).max()):
            return total
        falling = falling * (m - k)
    raise ConvergenceError("right-tail asymptotic series did not converge", float(np.abs(term).max()))


def _panel_edges(nu, beta, lam, left, right):
    # panels no wider than a quarter of the local oscillation period
    h_max = min(0.5, 0.5 * math.pi / (abs(nu) + 0.5 * abs(lam) + 1.0))
    uniform = np.arange(left, right, h_max)
    dy = 0.5 * math.pi / abs(beta)
    y = np.arange(dy, math.exp(right), dy)
    fast = np.log(y[y > math.exp(left)])
    edges = np.unique(np.concatenate([uniform, fast, [left, 0.0, right]]))
    return edges[(edges >= left) & (edges <= right)]


def canonical_amplitudes(nu, beta, lam, s_values, reg: RegularizationConfig = DEFAULT_REGULARIZATION):
    """J(nu, beta, lam; s) for every s in ``s_values`` (s = 0 allowed if the integral converges).

    Returns (amplitudes, error estimate).
    """
    if beta == 0 or not math.isfinite(beta):
        raise DomainError("beta must be finite and non-zero")
    if lam not in (0, 1):
        raise DomainError("spinor weight exp(-v/2) diverges where the phase freezes; use lam in {0, 1}")
    s = np.atleast_1d(np.asarray(s_values, dtype=float))
    if lam == 0 and nu == 0 and np.any(s == 0):
        raise DomainError("the undamped integral diverges at nu = 0")

    left = -reg.tau_window
    right = max(left + 1.0, math.log(_PHASE_RATE_CUTOFF / abs(beta)))
    edges = _panel_edges(nu, beta, lam, left, right)
    z0 = 1j * nu + 0.5 * lam

    def integrand(v):
        base = np.exp(z0 * v + 1j * beta * np.exp(v))
        return base[None, :] * np.exp(-s[:, None] * np.abs(v)[None, :])

    def phase_scale(lo, hi):
        return abs(nu) * np.maximum(np.abs(lo), np.abs(hi)) + abs(beta) * np.exp(hi)

    tails = _left_tail(z0 + s, beta, left) + _right_tail(z0 - s, beta, right)
    core, err, tol = _adaptive_panels(edges, integrand, reg.quad_rel_tol, tails, reg.max_refinements,
                                      phase_scale)
    result = core + tails
    scale = float(np.abs(result).min())
    if err > 2.0 * tol:
        raise ConvergenceError(f"quadrature error {err:.3g} above tolerance {tol:.3g}", err / max(scale, 1e-300))
    if err > _ROUNDOFF_LIMIT * scale:
        raise ConvergenceError(
            f"cancellation: roundoff floor {err:.3g} against an amplitude of {scale:.3g}",
            err / max(scale, 1e-300),
        )
    return result, err


def canonical_closed_form(nu, beta, lam):
    """Gamma(z) |beta|^(-z) exp(i sign(beta) pi z / 2), z = i nu + lam/2: the value of J at s = 0."""
    z = 1j * nu + 0.5 * lam
    if z == 0:
        raise DomainError("closed form has a pole at nu = 0 for the scalar field")
    sign = 1.0 if beta > 0 else -1.0
    return complex(np.exp(log_gamma_complex(z) - z * math.log(abs(beta)) + 1j * sign * math.pi * z / 2))


def neville(xs, ys, x0=0.0):
    """Value at ``x0`` of the polynomial through the points (xs, ys)."""
    p = [complex(y) for y in ys]
    n = len(xs)
    for k in range(1, n):
        for i in range(n - k):
            p[i] = ((x0 - xs[i + k]) * p[i] + (xs[i] - x0) * p[i + 1]) / (xs[i] - xs[i + k])
    return p[0]


def extrapolate_to_zero(s_values, amplitudes, order, tol, floor=0.0):
    """Polynomial (Richardson) extrapolation s -> 0 through the ``order + 1`` smallest s.

    The difference from the next-lower order serves as the error estimate;
    it must stay below ``tol * |result| + floor``.
    """
    xs = list(s_values)[-(order + 1):]
    ys = list(amplitudes)[-(order + 1):]
    best = neville(xs, ys)
    lower = neville(xs[1:], ys[1:])
    residual = abs(best - lower)
    if residual > tol * abs(best) + floor:
        raise ConvergenceError(
            f"s -> 0 extrapolation unstable: successive orders differ by {residual:.3g}", residual
        )
    return best, residual


# --- mapping physical inputs to the canonical integral --------------------


def _spinor_weight(stats, mode, spinor):
    """Eigenvalue lam of gamma0 gamma3 for the spinor carried along (0 for scalars)."""
    if stats is Statistics.BE:
        return 0
    if spinor is None:
        # spin-up for the -z wave, the mirrored eigenspace for the +z wave
        spinor = dirac.SPIN_UP if mode.direction == -1 else dirac.SPIN_UP_MIRROR
    return dirac.boost_eigenvalue(spinor)


def _canonical_args(Omega, mode, w, stats, spinor, phase_sign):
    if not (math.isfinite(Omega) and Omega > 0):
        raise DomainError(f"Omega must be finite and positive, got {Omega!r}")
    if phase_sign is None:
        phase_sign = -mode.direction
    if phase_sign not in (1, -1):
        raise DomainError("phase_sign must be +1 or -1")
    nu = Omega / w.rapidity_rate
    beta = phase_sign * mode.omega / w.rapidity_rate
    lam = _spinor_weight(stats, mode, spinor)
    if mode.direction == 1:
        # v -> -v turns exp(-v) into exp(v)
        nu, lam = -nu, -lam
    return nu, beta, lam


def analytic_amplitude(Omega, mode: PlaneWaveMode, w: AcceleratedWorldline, stats: Statistics,
                       spinor=None, phase_sign=None) -> complex:
    """Closed-form value of int dtau exp(i Omega tau) [spinor weight] exp(i phase(tau)).

    For the -z wave and scalar field this is
    (c/a) Gamma(i nu) (omega_K c/a)^(-i nu) exp(-pi nu / 2).
    By default the phase enters as -direction * doppler_phase, which makes
    both propagation directions give the same spectrum.
    """
    nu, beta, lam = _canonical_args(Omega, mode, w, stats, spinor, phase_sign)
    return canonical_closed_form(nu, beta, lam) / w.rapidity_rate


def analytic_spectrum(Omega, mode: PlaneWaveMode, w: AcceleratedWorldline, stats: Statistics) -> float:
    """Closed-form spectrum.

    BE: (2 pi c / (Omega a)) / (exp(2 pi Omega c / a) - 1)
    FD: (2 pi c / (omega_K a)) / (exp(2 pi Omega c / a) + 1)
    """
    if not (math.isfinite(Omega) and Omega > 0):
        raise DomainError(f"Omega must be finite and positive, got {Omega!r}")
    x = 2.0 * math.pi * Omega / w.rapidity_rate
    prefactor_freq = Omega if stats is Statistics.BE else mode.omega
    return 2.0 * math.pi / (prefactor_freq * w.rapidity_rate) * planck_factor(x, stats)


def regularized_amplitudes(Omega, mode, w, stats, reg: RegularizationConfig = DEFAULT_REGULARIZATION,
                           spinor=None, phase_sign=None, s_values=None):
    """Damped amplitudes (physical units) for each s in ``s_values`` (default: the schedule).

    ``s_values`` are in units of a/c.
    """
    nu, beta, lam = _canonical_args(Omega, mode, w, stats, spinor, phase_sign)
    s = reg.s_schedule if s_values is None else s_values
    amps, _ = canonical_amplitudes(nu, beta, lam, s, reg)
    return amps / w.rapidity_rate


def numeric_amplitude(Omega, mode, w, stats, reg: RegularizationConfig = DEFAULT_REGULARIZATION,
                      spinor=None, phase_sign=None) -> complex:
    """Amplitude from damped quadrature, extrapolated to zero damping."""
    nu, beta, lam = _canonical_args(Omega, mode, w, stats, spinor, phase_sign)
    amps, quad_err = canonical_amplitudes(nu, beta, lam, reg.s_schedule, reg)
    best, _ = extrapolate_to_zero(reg.s_schedule, amps, reg.extrapolation_order, reg.extrapolation_tol,
                                  floor=1e3 * quad_err)
    return best / w.rapidity_rate


def numeric_spectrum(Omega, mode: PlaneWaveMode, w: AcceleratedWorldline, stats: Statistics,
                     reg: RegularizationConfig = DEFAULT_REGULARIZATION, spinor=None, phase_sign=None) -> float:
    """|amplitude|^2 from direct quadrature; compare with :func:`analytic_spectrum`.

    For FD the integrand carries the boost weight of ``spinor`` (spin-up for
    the -z wave by default), i.e. exp(a tau / 2c).
    """
    return abs(numeric_amplitude(Omega, mode, w, stats, reg, spinor, phase_sign)) ** 2


def spectrum_table(omegas, mode, w, stats, reg: RegularizationConfig = DEFAULT_REGULARIZATION):
    """Numeric spectrum on a frequency grid, as :class:`SpectrumPoint` rows."""
    rows = []
    for Omega in omegas:
        amp = numeric_amplitude(Omega, mode, w, stats, reg)
        rows.append(SpectrumPoint(float(Omega), abs(amp) ** 2, amp))
    return rows


# --- inertial observer -----------------------------------------------------


def _inertial_amplitudes(k, s, reg):
    # exp(i k t - s|t|) in units where omega_K = 1
    window = reg.tau_window
    h = min(0.5, 0.5 * math.pi / k)
    edges = np.unique(np.concatenate([np.arange(-window, window, h), [-window, 0.0, window]]))

    def integrand(t):
        return np.exp(1j * k * t)[None, :] * np.exp(-s[:, None] * np.abs(t)[None, :])

    def phase_scale(lo, hi):
        return k * np.maximum(np.abs(lo), np.abs(hi))

    tails = np.exp(-(1j * k + s) * window) / (1j * k + s) - np.exp((1j * k - s) * window) / (1j * k - s)
    core, err, tol = _adaptive_panels(edges, integrand, reg.quad_rel_tol, tails, reg.max_refinements,
                                      phase_scale)
    if err > 2.0 * tol:
        raise ConvergenceError(f"quadrature error {err:.3g} above tolerance {tol:.3g}", err)
    return core + tails, err


def inertial_amplitudes(Omega, mode: PlaneWaveMode, reg: RegularizationConfig = DEFAULT_REGULARIZATION,
                        s_values=None):
    """Damped amplitudes int dt exp(i (Omega + omega_K) t - s|t|) for an unaccelerated observer.

    Here ``s_values`` (default: the schedule) and the window are in units of
    omega_K and 1/omega_K, since there is no acceleration scale.
    """
    if not (math.isfinite(Omega) and Omega > 0):
        raise DomainError(f"Omega must be finite and positive, got {Omega!r}")
    s = np.atleast_1d(np.asarray(reg.s_schedule if s_values is None else s_values, dtype=float))
    k = (Omega + mode.omega) / mode.omega
    amps, _ = _inertial_amplitudes(k, s, reg)
    return amps / mode.omega


def inertial_spectrum(Omega, mode: PlaneWaveMode, reg: RegularizationConfig = DEFAULT_REGULARIZATION) -> float:
    """Zero-acceleration spectrum, extrapolated to zero damping (vanishes for Omega > 0)."""
    if not (math.isfinite(Omega) and Omega > 0):
        raise DomainError(f"Omega must be finite and positive, got {Omega!r}")
    s = np.asarray(reg.s_schedule, dtype=float)
    k = (Omega + mode.omega) / mode.omega
    amps, err = _inertial_amplitudes(k, s, reg)
    best, _ = extrapolate_to_zero(s, amps, reg.extrapolation_order, reg.extrapolation_tol,
                                  floor=reg.extrapolation_tol * abs(amps[-1]) + 1e3 * err)
    return abs(best / mode.omega) ** 2

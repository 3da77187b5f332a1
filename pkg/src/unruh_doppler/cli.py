"""Command-line front end. Every subcommand writes one CSV table.

Floats are printed with 17 significant digits so tables round-trip exactly
and repeated runs are byte-identical.
"""
from __future__ import annotations

import argparse
import csv
import io
import math
import sys

import numpy as np

from . import detector, field_correlators, kinematics, spectra, units
from .errors import ConvergenceError, DomainError

COLUMNS = {
    "temperature": ["body", "mass_kg", "radius_m", "accel_m_s2", "temperature_K"],
    "doppler": ["tau", "velocity", "lab_time", "position", "omega_prime", "phase"],
    "spectrum": ["omega", "statistics", "analytic", "numeric", "rel_err"],
    "correlator": ["omega", "thermal", "accel_closed", "accel_modesum", "rel_err"],
    "delta-kernel": ["delta_omega", "kernel_re", "kernel_im"],
    "detector": ["omega0", "gamma", "source", "energy", "planck_ref", "rel_err"],
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _fmt(value):
    if isinstance(value, str):
        return value
    return "%.17g" % value


def _constants(args):
    return units.SI if args.units == "si" else units.NATURAL


def _regularization(args):
    return spectra.RegularizationConfig(
        s_schedule=tuple(args.s_schedule),
        tau_window=args.tau_window,
        quad_rel_tol=args.quad_rel_tol,
        extrapolation_order=args.extrapolation_order,
    )


def _temperature(args):
    if args.units != "si":
        raise UsageError("temperature: the surface-gravity table is only defined with --units si")
    for row in units.exercise_table(units.SI):
        yield [row.body, row.mass, row.radius, row.acceleration, row.temperature]


def _doppler(args):
    w = kinematics.AcceleratedWorldline(args.accel, _constants(args))
    mode = kinematics.PlaneWaveMode(args.omega_k, args.direction)
    taus = np.linspace(args.tau_min, args.tau_max, args.n_points) / w.rapidity_rate
    velocity = kinematics.lab_velocity_of_proper_time(taus, w)
    t, z = kinematics.worldline_point(taus, w)
    omega_prime = kinematics.doppler_frequency(taus, mode, w)
    phase = kinematics.doppler_phase(taus, mode, w)
    for row in zip(taus, velocity, t, z, omega_prime, phase):
        yield [float(v) for v in row]


def _spectrum(args):
    w = kinematics.AcceleratedWorldline(args.accel, _constants(args))
    stats = spectra.Statistics(args.statistics)
    reg = _regularization(args)
    mode = kinematics.PlaneWaveMode(args.omega_k_c_over_a * w.rapidity_rate, args.direction)
    for nu in args.omega_c_over_a:
        Omega = nu * w.rapidity_rate
        analytic = spectra.analytic_spectrum(Omega, mode, w, stats)
        numeric = spectra.numeric_spectrum(Omega, mode, w, stats, reg)
        yield [Omega, stats.value, analytic, numeric, abs(numeric / analytic - 1.0)]


def _grid(args):
    half = 0.5 * args.x_range
    return field_correlators.ModeGrid(-half, half, args.n_modes, args.volume)


def _correlator(args):
    consts = _constants(args)
    w = kinematics.AcceleratedWorldline(args.accel, consts)
    stats = spectra.Statistics(args.statistics)
    grid = _grid(args)
    T = units.unruh_temperature(w.a, consts)
    for nu in args.omega_c_over_a:
        Omega = nu * w.rapidity_rate
        thermal = field_correlators.thermal_density(Omega, T, consts, stats)
        closed = field_correlators.accelerated_vacuum_density(Omega, w, stats)
        modesum = field_correlators.accelerated_density_from_modes(Omega, w, grid, stats)
        yield [Omega, thermal, closed, modesum, abs(modesum / closed - 1.0)]


def _delta_kernel(args):
    w = kinematics.AcceleratedWorldline(args.accel, _constants(args))
    grid = _grid(args)
    deltas = np.linspace(args.delta_min, args.delta_max, args.n_points) * w.rapidity_rate
    values = field_correlators.delta_kernel(deltas, w, grid)
    for d, k in zip(deltas, values):
        yield [float(d), float(k.real), float(k.imag)]


def _detector(args):
    consts = _constants(args)
    sources = ["thermal", "accelerated"] if args.source == "both" else [args.source]
    gamma_ratio = args.gamma_over_omega0
    for x in args.hbar_omega0_over_kt:
        T = consts.hbar * args.omega0 / (consts.k_boltzmann * x)
        reference = spectra.planck_factor(x, spectra.Statistics.BE)
        for source in sources:
            if source == "thermal":
                density = detector.thermal_source(T, consts)
            else:
                w = kinematics.AcceleratedWorldline(units.acceleration_for_temperature(T, consts), consts)
                density = detector.accelerated_source(w)
            if gamma_ratio == 0:
                p = detector.DetectorParams(args.omega0, args.narrowband_start * args.omega0)
                energy = detector.narrowband_occupation(p, density, consts)
            else:
                p = detector.DetectorParams(args.omega0, gamma_ratio * args.omega0)
                energy = detector.steady_state_energy(p, density, consts)
            yield [args.omega0, gamma_ratio * args.omega0, source, energy, reference,
                   abs(energy / reference - 1.0)]


def _positive(text):
    value = float(text)
    if not (math.isfinite(value) and value > 0):
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return value


def _direction(text):
    value = int(text)
    if value not in (1, -1):
        raise argparse.ArgumentTypeError("direction must be 1 or -1")
    return value


def _add_common(p, default_units="natural"):
    p.add_argument("--units", choices=["si", "natural"], default=default_units,
                   help=f"unit system (default: {default_units})")
    p.add_argument("--output", default="-", help="CSV destination, '-' for standard output (default)")


def _add_regularization(p):
    d = spectra.DEFAULT_REGULARIZATION
    p.add_argument("--s-schedule", type=_positive, nargs="+", default=list(d.s_schedule),
                   help="decreasing damping rates in units of a/c")
    p.add_argument("--tau-window", type=_positive, default=d.tau_window,
                   help="quadrature reaches down to tau = -window c/a")
    p.add_argument("--quad-rel-tol", type=_positive, default=d.quad_rel_tol)
    p.add_argument("--extrapolation-order", type=int, default=d.extrapolation_order)


def _add_grid(p):
    g = field_correlators.DEFAULT_GRID
    p.add_argument("--x-range", type=_positive, default=g.x_range,
                   help="width of the mode grid in x = log(omega c/a), centred on 0")
    p.add_argument("--n-modes", type=int, default=g.n_modes, help="modes per propagation direction")
    p.add_argument("--volume", type=_positive, default=g.volume, help="box length V")


def build_parser():
    parser = _Parser(prog="unruh-doppler", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text, description=help_text,
                           epilog="columns: " + ",".join(COLUMNS[name]))
        return p

    p = add("temperature", "Acceleration temperature at the surface of the Earth, the Sun and a solar-mass black hole.")
    _add_common(p, default_units="si")
    p.set_defaults(handler=_temperature)

    p = add("doppler", "Worldline and Doppler-shifted frequency/phase of one plane wave along proper time.")
    _add_common(p)
    p.add_argument("--accel", type=_positive, default=1.0, help="proper acceleration a")
    p.add_argument("--omega-k", type=_positive, default=1.0, help="Minkowski frequency of the wave")
    p.add_argument("--direction", type=_direction, default=-1, help="propagation direction +1 or -1")
    p.add_argument("--tau-min", type=float, default=-3.0, help="first proper time, units of c/a")
    p.add_argument("--tau-max", type=float, default=3.0, help="last proper time, units of c/a")
    p.add_argument("--n-points", type=int, default=13)
    p.set_defaults(handler=_doppler)

    p = add("spectrum", "Closed-form and quadrature spectrum of the accelerated observer.")
    _add_common(p)
    p.add_argument("--statistics", choices=["be", "fd"], default="be")
    p.add_argument("--omega-c-over-a", type=_positive, nargs="+", default=[0.25, 0.5, 1.0, 2.0, 4.0])
    p.add_argument("--omega-k-c-over-a", type=_positive, default=1.0)
    p.add_argument("--direction", type=_direction, default=-1)
    p.add_argument("--accel", type=_positive, default=1.0)
    _add_regularization(p)
    p.set_defaults(handler=_spectrum)

    p = add("correlator", "Thermal, closed-form accelerated and mode-sum accelerated densities.")
    _add_common(p)
    p.add_argument("--statistics", choices=["be", "fd"], default="be")
    p.add_argument("--omega-c-over-a", type=_positive, nargs="+", default=[0.5, 1.0, 2.0])
    p.add_argument("--accel", type=_positive, default=1.0)
    _add_grid(p)
    p.set_defaults(handler=_correlator)

    p = add("delta-kernel", "Finite mode-sum kernel as a function of Omega - Omega'.")
    _add_common(p)
    p.add_argument("--delta-min", type=float, default=-4.0, help="units of a/c")
    p.add_argument("--delta-max", type=float, default=4.0, help="units of a/c")
    p.add_argument("--n-points", type=int, default=81)
    p.add_argument("--accel", type=_positive, default=1.0)
    _add_grid(p)
    p.set_defaults(handler=_delta_kernel)

    p = add("detector", "Oscillator detector energy against the Planck occupation.")
    _add_common(p)
    p.add_argument("--source", choices=["thermal", "accelerated", "both"], default="both")
    p.add_argument("--omega0", type=_positive, default=1.0)
    p.add_argument("--hbar-omega0-over-kt", type=_positive, nargs="+", default=[1.0, 2.0 * math.pi])
    p.add_argument("--gamma-over-omega0", type=float, default=0.0,
                   help="linewidth; 0 (default) extrapolates to the narrowband limit")
    p.add_argument("--narrowband-start", type=_positive, default=1e-2,
                   help="largest gamma/omega0 of the halving schedule used for the narrowband limit")
    p.set_defaults(handler=_detector)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"unruh-doppler: error: {exc}", file=stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(COLUMNS[args.command])
    try:
        for row in args.handler(args):
            writer.writerow([_fmt(v) for v in row])
    except UsageError as exc:
        print(f"unruh-doppler: error: {exc}", file=stderr)
        return 2
    except DomainError as exc:
        print(f"unruh-doppler: error: {exc}", file=stderr)
        return 2
    except ConvergenceError as exc:
        print(f"unruh-doppler: numeric failure: {exc} (worst residual {exc.residual:.3g})", file=stderr)
        return 1

    text = buffer.getvalue()
    if args.output == "-":
        stdout.write(text)
    else:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

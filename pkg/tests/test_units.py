import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from unruh_doppler.errors import DomainError
from unruh_doppler.units import (
    NATURAL,
    SI,
    PhysicalConstants,
    acceleration_for_temperature,
    exercise_table,
    schwarzschild_radius,
    surface_gravity,
    unruh_temperature,
)

# CODATA 2018, typed in independently of the module
HBAR = 1.054571817e-34
C = 299792458.0
KB = 1.380649e-23
G = 6.67430e-11


def oracle_T(a):
    return HBAR * a / (2 * math.pi * KB * C)


def test_natural_units_are_exactly_one():
    assert (NATURAL.hbar, NATURAL.c, NATURAL.k_boltzmann) == (1.0, 1.0, 1.0)


def test_constants_must_be_positive():
    with pytest.raises(DomainError):
        PhysicalConstants(hbar=-1.0, c=1.0, k_boltzmann=1.0, G=1.0)


def test_unit_temperature_in_natural_units():
    assert unruh_temperature(2 * math.pi, NATURAL) == pytest.approx(1.0, rel=1e-15)


@pytest.mark.parametrize("a, expected", [(9.80665, 3.98e-20), (274.0, 1.11e-18)])
def test_unruh_temperature_si(a, expected):
    T = unruh_temperature(a, SI)
    assert T == pytest.approx(oracle_T(a), rel=1e-14)
    assert T == pytest.approx(expected, rel=5e-3)


@pytest.mark.parametrize("a", [0.0, -1.0, math.inf, math.nan])
def test_unruh_temperature_rejects_bad_acceleration(a):
    with pytest.raises(DomainError):
        unruh_temperature(a, SI)


def test_acceleration_for_temperature_inverts():
    assert unruh_temperature(acceleration_for_temperature(1.7, SI), SI) == pytest.approx(1.7, rel=1e-14)


@pytest.mark.parametrize("M, r, expected", [
    (5.9722e24, 6.3781e6, 9.80),
    (1.98892e30, 6.957e8, 274.0),
])
def test_surface_gravity(M, r, expected):
    a = surface_gravity(M, r, SI)
    assert a == pytest.approx(G * M / r**2, rel=1e-14)
    assert a == pytest.approx(expected, rel=3e-3)


def test_surface_gravity_unit_inputs_is_G():
    assert surface_gravity(1.0, 1.0, SI) == G


@pytest.mark.parametrize("M, r", [(0.0, 1.0), (1.0, 0.0), (-1.0, 1.0)])
def test_surface_gravity_domain(M, r):
    with pytest.raises(DomainError):
        surface_gravity(M, r, SI)


@pytest.mark.parametrize("M, expected", [(1.98892e30, 2.95e3), (5.9722e24, 8.87e-3)])
def test_schwarzschild_radius(M, expected):
    rs = schwarzschild_radius(M, SI)
    assert rs == pytest.approx(2 * G * M / C**2, rel=1e-14)
    assert rs == pytest.approx(expected, rel=3e-3)


def test_schwarzschild_radius_inversion():
    assert schwarzschild_radius(C**2 / (2 * G), SI) == pytest.approx(1.0, rel=1e-14)


def test_exercise_table_rows():
    rows = {row.body: row for row in exercise_table(SI)}
    assert list(rows) == ["earth", "sun", "black_hole"]
    assert rows["earth"].temperature == pytest.approx(3.98e-20, rel=5e-3)
    assert rows["sun"].temperature == pytest.approx(1.11e-18, rel=5e-3)
    bh = rows["black_hole"]
    M = 1.98892e30
    assert bh.acceleration == pytest.approx(C**4 / (4 * G * M), rel=1e-12)
    assert bh.acceleration == pytest.approx(1.52e13, rel=5e-3)
    assert bh.temperature == pytest.approx(6.17e-8, rel=5e-3)


def test_exercise_table_needs_si():
    with pytest.raises(DomainError):
        exercise_table(NATURAL)


@given(st.floats(1e-6, 1e20), st.floats(1e-3, 1e3))
def test_temperature_is_linear(a, lam):
    assert unruh_temperature(lam * a, SI) == pytest.approx(lam * unruh_temperature(a, SI), rel=4e-16)


@given(st.floats(1e10, 1e35), st.floats(1e-3, 1e12))
def test_inverse_square_law(M, r):
    assert surface_gravity(M, 2 * r, SI) == pytest.approx(surface_gravity(M, r, SI) / 4, rel=1e-15)


@given(st.floats(1e-3, 1e40))
def test_black_hole_temperature_formula(M):
    T = unruh_temperature(surface_gravity(M, schwarzschild_radius(M, SI), SI), SI)
    assert T == pytest.approx(HBAR * C**3 / (8 * math.pi * G * M * KB), rel=1e-12)

import pytest

from unruh_doppler.kinematics import AcceleratedWorldline
from unruh_doppler.units import NATURAL


@pytest.fixture
def unit_worldline():
    """a = c = 1 in natural units, so tau, Omega etc. are already in units of c/a, a/c."""
    return AcceleratedWorldline(1.0, NATURAL)

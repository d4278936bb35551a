import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from geodesic_ivp.errors import DegenerateStateError, PoleSingularityError
from geodesic_ivp.geodetic_ode import (
    azimuth_geodetic,
    christoffel,
    clairaut_from_azimuth,
    clairaut_geodetic,
    first_fundamental_form,
    geodetic_rhs,
    initial_geodetic_state,
    unit_speed_geodetic,
)
from geodesic_ivp.spheroid import WGS84, meridian_radius, prime_vertical_radius

# 32-digit values from scripts/oracle_values.py: Christoffel symbols by
# differentiating the metric coefficients numerically
CHRISTOFFEL = {
    30: (0.008710833107786457228686987, 0.4352014176625445202906735, -0.5744466581536969454329198),
    45: (0.01007529390817882802116427, 0.5016848741855691087386955, -0.9966415686972737239929452),
    60: (0.008740137050006894875627022, 0.4337422738156610556847989, -1.729137428552208328568904),
    89: (0.000352806842272735083571354, 0.01744978417138998092687524, -57.28984402847866710891696),
}
# unit-speed state at 50 deg heading 35 deg and its derivative
RHS_50_35 = (
    1.285356518756235770787742e-7,
    -9.790772537291613390500434e-15,
    1.39628873695902729021568e-7,
    4.265870329308157093865826e-14,
)

phis = st.floats(-1.5, 1.5, allow_nan=False)
azis = st.floats(0, 2 * math.pi, allow_nan=False)


@pytest.mark.parametrize("lat", sorted(CHRISTOFFEL))
def test_christoffel_oracle(lat):
    got = christoffel(WGS84, math.radians(lat))
    for g, r in zip(got, CHRISTOFFEL[lat]):
        assert g == pytest.approx(r, rel=1e-13)


def test_christoffel_vanish_on_equator():
    assert christoffel(WGS84, 0.0) == (0.0, 0.0, -0.0)


def test_metric_is_squared_radii():
    phi = 0.7
    m = first_fundamental_form(WGS84, phi)
    assert m.E == pytest.approx(meridian_radius(WGS84, phi) ** 2, rel=1e-15)
    assert m.F == 0
    assert m.G == pytest.approx((prime_vertical_radius(WGS84, phi) * math.cos(phi)) ** 2, rel=1e-15)
    assert first_fundamental_form(WGS84, math.pi / 2).G == 0


def test_rhs_oracle():
    y = initial_geodetic_state(WGS84, math.radians(50), 0.0, math.radians(35))
    got = geodetic_rhs(WGS84, np.array(y))
    assert np.allclose(got, RHS_50_35, rtol=1e-14, atol=0)


def test_rhs_batched_matches_single():
    ys = np.array([initial_geodetic_state(WGS84, p, 0.1, a) for p, a in [(0.2, 1.0), (-0.9, 2.5), (1.2, 4.0)]]).T
    batch = geodetic_rhs(WGS84, ys)
    for k in range(3):
        assert np.array_equal(batch[:, k], geodetic_rhs(WGS84, ys[:, k]))


def test_pole_guards():
    with pytest.raises(PoleSingularityError):
        christoffel(WGS84, math.pi / 2)
    with pytest.raises(PoleSingularityError):
        geodetic_rhs(WGS84, np.array([-math.pi / 2, 0.0, 0.0, 0.0]))
    with pytest.raises(PoleSingularityError):
        initial_geodetic_state(WGS84, math.pi / 2, 0.0, 0.0)


@given(phis, azis)
def test_initial_state_is_unit_speed_with_requested_azimuth(phi, alpha):
    y = initial_geodetic_state(WGS84, phi, 0.0, alpha)
    assert unit_speed_geodetic(WGS84, y) == pytest.approx(1.0, abs=1e-14)
    d = math.fmod(azimuth_geodetic(WGS84, y) - math.degrees(alpha) + 540, 360) - 180
    assert abs(d) < 1e-9
    assert clairaut_geodetic(WGS84, y) == pytest.approx(
        clairaut_from_azimuth(WGS84, phi, alpha), abs=1e-8
    )


def test_zero_direction_is_degenerate():
    with pytest.raises(DegenerateStateError):
        azimuth_geodetic(WGS84, (0.3, 0.0, 0.0, 0.0))

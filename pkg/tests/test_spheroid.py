import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from geodesic_ivp.errors import DomainError, EllipsoidError
from geodesic_ivp.spheroid import (
    WGS84,
    CartesianCoord,
    Ellipsoid,
    GeodeticCoord,
    cartesian_to_geodetic,
    geodetic_to_cartesian,
    make_ellipsoid,
    meridian_radius,
    normalize_azimuth,
    prime_vertical_radius,
    sincosd,
    surface_residual,
    wrap_longitude,
)

# 32-digit values from scripts/oracle_values.py (radii from the meridian
# ellipse by differentiation, not from the closed forms)
RADII = {
    0: (6378137.0, 6335439.327292820030838208),
    30: (6383480.917690109132587151, 6351377.103715514247331738),
    45: (6388838.290121147997511201, 6367381.815619548916741117),
    60: (6394209.173847894468255225, 6383453.857229077640334456),
    89: (6399587.057354787452903865, 6399573.920567601204860849),
}
XYZ_LON40 = {
    0: (4885936.406301549208511683, 4099787.436483274879173526, 0.0),
    30: (4234890.278665873368642975, 3553494.870904782914338487, 3170373.735383637767320428),
    60: (2449124.202883285464417446, 2055059.215346714736756851, 5500477.133938639178510344),
    89: (85558.12064820316225841007, 71791.78748012849889900954, 6355777.626639486113820268),
}

lats = st.floats(-90, 90, allow_nan=False)
lons = st.floats(-180, 180, allow_nan=False).filter(lambda v: v > -180)


def test_wgs84_derived_constants():
    assert WGS84.a == 6378137.0
    assert WGS84.f == 1 / 298.257223563
    assert WGS84.e2 == pytest.approx(0.0066943799901413165, rel=1e-15)
    assert WGS84.b == pytest.approx(6356752.314245179, abs=1e-8)
    assert not WGS84.is_sphere


def test_sphere_has_zero_eccentricity():
    s = make_ellipsoid(1.0, 0.0)
    assert s.is_sphere and s.e2 == 0 and s.b == 1.0


@pytest.mark.parametrize(
    "a, f, field",
    [(0, 0.1, "a"), (-1, 0.1, "a"), (1, 1.0, "f"), (1, -0.01, "f"), (math.nan, 0, "a"), (1, math.inf, "f")],
)
def test_invalid_ellipsoid_names_field(a, f, field):
    with pytest.raises(EllipsoidError) as info:
        Ellipsoid(a, f)
    assert info.value.field == field


@pytest.mark.parametrize("lat", sorted(RADII))
def test_radii_match_oracle(lat):
    n, m = RADII[lat]
    phi = math.radians(lat)
    assert prime_vertical_radius(WGS84, phi) == pytest.approx(n, rel=1e-15)
    assert meridian_radius(WGS84, phi) == pytest.approx(m, rel=1e-15)


def test_radii_at_pole_coincide():
    # polar radius of curvature a^2 / b for both
    c = WGS84.a**2 / WGS84.b
    assert prime_vertical_radius(WGS84, math.pi / 2) == pytest.approx(c, rel=1e-15)
    assert meridian_radius(WGS84, math.pi / 2) == pytest.approx(c, rel=1e-15)


@pytest.mark.parametrize("lat", sorted(XYZ_LON40))
def test_geodetic_to_cartesian_oracle(lat):
    got = geodetic_to_cartesian(WGS84, GeodeticCoord(lat, 40.0))
    for g, r in zip(got, XYZ_LON40[lat]):
        assert g == pytest.approx(r, abs=2e-9)


def test_exact_special_points():
    assert geodetic_to_cartesian(WGS84, GeodeticCoord(0, 0)) == (WGS84.a, 0.0, 0.0)
    assert geodetic_to_cartesian(WGS84, GeodeticCoord(0, 90)) == (0.0, WGS84.a, 0.0)
    x, y, z = geodetic_to_cartesian(WGS84, GeodeticCoord(90, 0))
    assert (x, y) == (0.0, 0.0) and z == pytest.approx(WGS84.b, abs=1e-8)


@given(lats, lons)
def test_round_trip(lat, lon):
    g = cartesian_to_geodetic(WGS84, geodetic_to_cartesian(WGS84, GeodeticCoord(lat, lon)))
    assert g.lat == pytest.approx(lat, abs=1e-12)
    if abs(lat) < 90 - 1e-9:
        d = math.fmod(g.lon - lon + 540, 360) - 180
        assert abs(d) <= 1e-12 / max(math.cos(math.radians(lat)), 1e-3)


@given(lats, lons)
def test_surface_points_have_tiny_residual(lat, lon):
    c = geodetic_to_cartesian(WGS84, GeodeticCoord(lat, lon))
    assert abs(surface_residual(WGS84, c)) <= 1e-15


def test_surface_residual_vectorised():
    pts = np.array([[WGS84.a, 0, 0], [0, 0, WGS84.b], [2 * WGS84.a, 0, 0]]).T
    res = surface_residual(WGS84, pts)
    assert res[0] == 0 and abs(res[1]) < 1e-15 and res[2] == pytest.approx(3.0)


def test_far_off_surface_point_rejected():
    with pytest.raises(DomainError):
        cartesian_to_geodetic(WGS84, CartesianCoord(1e7, 0, 0))


def test_pole_maps_to_zero_longitude():
    assert cartesian_to_geodetic(WGS84, CartesianCoord(0, 0, -WGS84.b)) == (-90.0, 0.0)


def test_checked_coordinate_bounds():
    assert GeodeticCoord.checked(90, 180) == (90.0, 180.0)
    for lat, lon in [(90.5, 0), (0, -180), (0, 181), (math.nan, 0)]:
        with pytest.raises(DomainError):
            GeodeticCoord.checked(lat, lon)


@pytest.mark.parametrize(
    "deg, s, c", [(0, 0, 1), (90, 1, 0), (180, 0, -1), (270, -1, 0), (-90, -1, 0), (450, 1, 0), (30, 0.5, None)]
)
def test_sincosd_exact_values(deg, s, c):
    gs, gc = sincosd(deg)
    assert gs == s if deg != 30 else gs == pytest.approx(0.5, abs=1e-16)
    if c is not None:
        assert gc == c


@given(st.floats(-1e4, 1e4, allow_nan=False))
def test_sincosd_reflections_are_exact(x):
    s, c = sincosd(x)
    assert sincosd(-x) == (-s + 0.0, c)
    assert s * s + c * c == pytest.approx(1.0, abs=4e-16)


@pytest.mark.parametrize("x", [0.125, 33.25, 45.0, 89.875, 120.5, 179.0])
def test_sincosd_supplement_exact_on_grid(x):
    # 180 - x is exact for these, so the reflection must be too
    s, c = sincosd(x)
    s2, c2 = sincosd(180 - x)
    assert s2 == s and c2 == -c


@pytest.mark.parametrize(
    "lon, want", [(180, 180), (-180, 180), (540, 180), (190, -170), (-190, 170), (0, 0), (-0.0, 0)]
)
def test_wrap_longitude(lon, want):
    assert wrap_longitude(lon) == want


@pytest.mark.parametrize("az, want", [(360, 0), (-90, 270), (725, 5), (-1e-20, 0), (0, 0)])
def test_normalize_azimuth(az, want):
    assert normalize_azimuth(az) == want

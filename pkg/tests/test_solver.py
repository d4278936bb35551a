import math
import warnings

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.integrate import quad
from scipy.optimize import brentq

from geodesic_ivp import (
    WGS84,
    DirectProblem,
    Ellipsoid,
    GeodeticCoord,
    PoleSingularityError,
    SafeDomainWarning,
    convergence_study,
    geodetic_to_cartesian,
    select_steps,
    solve_direct,
    trace_direct,
)
from geodesic_ivp.solver import WARN_HIGH_LATITUDE
from geodesic_ivp.spheroid import meridian_radius


def solve(lat, lon, azi, s, system="cartesian", n=None, ell=WGS84):
    return solve_direct(ell, DirectProblem((lat, lon), azi, s, system, n))


def dist(p, q):
    return math.dist(tuple(p), tuple(q))


@pytest.mark.parametrize("s, n", [(20003931, 2001), (5, 16), (0, 16), (10000, 16), (1e12, 2**20)])
def test_select_steps(s, n):
    assert select_steps(s) == n


def test_problem_normalises_inputs():
    p = DirectProblem((10.0, 190.0), -30.0, 5.0)
    assert p.start == (10.0, -170.0) and p.alpha0 == 330.0 and p.steps == 16
    for bad in [dict(s01=-1), dict(system="polar"), dict(n=0), dict(alpha0=math.nan)]:
        kw = dict(start=(0, 0), alpha0=0.0, s01=1.0) | bad
        with pytest.raises(ValueError):
            DirectProblem(**kw)


@pytest.mark.parametrize("system", ["cartesian", "geodetic"])
def test_quarter_equator(system):
    r = solve(0, 0, 90, math.pi * WGS84.a / 2, system, 1000)
    assert r.end_geodetic.lat == pytest.approx(0, abs=1e-12)
    assert r.end_geodetic.lon == pytest.approx(90, abs=1e-9)
    assert r.alpha1 == pytest.approx(90, abs=1e-9)


@pytest.mark.parametrize("system", ["cartesian", "geodetic"])
def test_zero_length(system):
    r = solve(12.5, -40, 33, 0.0, system)
    assert r.end_geodetic == (12.5, -40.0) and r.alpha1 == 33.0
    d = r.diagnostics
    assert d.max_abs_delta_c == 0 and d.clairaut_c1 == d.clairaut_c0
    if system == "cartesian":
        assert d.max_abs_surface_residual == 0 and d.max_abs_tangency_residual == 0
    else:
        assert d.max_abs_surface_residual is None


def _meridian_latitude(s):
    arc = lambda phi: quad(lambda t: meridian_radius(WGS84, t), 0, phi, epsabs=1e-9, epsrel=1e-13)[0]
    return math.degrees(brentq(lambda phi: arc(phi) - s, 0, math.pi / 2, xtol=1e-15))


@pytest.mark.parametrize("system", ["cartesian", "geodetic"])
def test_meridian_arc_against_quadrature(system):
    s = 1e6
    r = solve(0, 0, 0, s, system, 1000)
    assert r.end_geodetic.lat == pytest.approx(_meridian_latitude(s), abs=1e-11)
    assert r.end_geodetic.lon == 0 and r.alpha1 == pytest.approx(0, abs=1e-12)


def _great_circle(lat0, azi0, s):
    # end point and azimuth on the unit sphere from spherical trigonometry
    p0, a0 = math.radians(lat0), math.radians(azi0)
    lat1 = math.asin(math.sin(p0) * math.cos(s) + math.cos(p0) * math.sin(s) * math.cos(a0))
    dlon = math.atan2(math.sin(a0) * math.sin(s) * math.cos(p0), math.cos(s) - math.sin(p0) * math.sin(lat1))
    azi1 = math.atan2(math.sin(a0) * math.cos(p0), math.cos(s) * math.cos(p0) * math.cos(a0) - math.sin(p0) * math.sin(s))
    return math.degrees(lat1), math.degrees(dlon), math.degrees(azi1) % 360


def test_unit_sphere_example():
    sphere = Ellipsoid(1.0, 0.0)
    r = solve(0, 0, 45, math.pi / 3, ell=sphere, n=1000)
    lat1, lon1, _ = _great_circle(0, 45, math.pi / 3)
    want = geodetic_to_cartesian(sphere, GeodeticCoord(lat1, lon1))
    assert dist(r.end_cartesian, want) <= 5e-9


@settings(max_examples=30, deadline=None)
@given(st.floats(-80, 80), st.floats(0, 359.9), st.floats(0.1, 3.0))
def test_unit_sphere_great_circles(lat0, azi0, s):
    sphere = Ellipsoid(1.0, 0.0)
    r = solve(lat0, 0, azi0, s, ell=sphere, n=500)
    lat1, lon1, azi1 = _great_circle(lat0, azi0, s)
    assert dist(r.end_cartesian, geodetic_to_cartesian(sphere, GeodeticCoord(lat1, lon1))) < 1e-9
    if abs(lat1) < 89:
        assert abs(math.fmod(r.alpha1 - azi1 + 540, 360) - 180) < 1e-7


def test_end_representations_agree():
    r = solve(-33, 151, 77, 1.5e7, n=1500)
    assert dist(r.end_cartesian, geodetic_to_cartesian(WGS84, r.end_geodetic)) < 1e-7


def test_trace_contracts():
    prob = DirectProblem((10, 20), 50, 3e6, n=100)
    full = trace_direct(WGS84, prob, 1)
    assert len(full) == 101 and full[0].s == 0
    assert all(b.s > a.s for a, b in zip(full, full[1:]))
    ends = trace_direct(WGS84, prob, 100)
    assert len(ends) == 2
    r = solve_direct(WGS84, prob)
    assert ends[-1].position == r.end_cartesian and ends[-1].alpha == r.alpha1
    assert full[0].geodetic == (10.0, 20.0) and full[0].alpha == pytest.approx(50, abs=1e-12)
    assert len(trace_direct(WGS84, prob, 30)) == 5  # 0, 30, 60, 90, 100


def test_trace_rejects_bad_stride():
    with pytest.raises(ValueError):
        trace_direct(WGS84, DirectProblem((0, 0), 0, 1.0), 0)


def test_equatorial_trace_stays_on_equator():
    for t in trace_direct(WGS84, DirectProblem((0, 0), 90, 2e7, n=400), 10):
        assert abs(math.radians(t.geodetic.lat)) <= 1e-12
        assert t.alpha == pytest.approx(90, abs=1e-9)


def test_trace_longitude_unwrapped():
    tr = trace_direct(WGS84, DirectProblem((0, 170), 90, 4e6, n=100), 1)
    assert tr[-1].lon_unwrapped > 180 and tr[-1].geodetic.lon < 0
    assert tr[-1].lon_unwrapped - 360 == pytest.approx(tr[-1].geodetic.lon, abs=1e-9)


@pytest.mark.parametrize("system", ["cartesian", "geodetic"])
def test_diagnostics_match_full_trace(system):
    prob = DirectProblem((20, 0), 70, 8e6, system, 200)
    r = solve_direct(WGS84, prob)
    tr = trace_direct(WGS84, prob, 1)
    assert r.diagnostics.max_abs_delta_c == pytest.approx(max(abs(t.delta_c) for t in tr), rel=1e-12, abs=1e-15)


def test_reversal_returns_to_start():
    lat0, lon0, azi0, s = 25.0, 10.0, 40.0, 9e6
    fwd = solve(lat0, lon0, azi0, s, n=1000)
    back = solve(fwd.end_geodetic.lat, fwd.end_geodetic.lon, fwd.alpha1 + 180, s, n=1000)
    start = geodetic_to_cartesian(WGS84, GeodeticCoord(lat0, lon0))
    assert dist(back.end_cartesian, start) <= 10 * 5e-5


def _dyadic(draw_int, scale):
    return draw_int / scale


@settings(max_examples=20, deadline=None)
@given(st.integers(-80 * 64, 80 * 64), st.integers(0, 180 * 64), st.integers(1, 15000))
def test_mirror_symmetry(lat_i, azi_i, s_km):
    # dyadic inputs keep -lat and 180 - azi exact
    lat, azi, s = lat_i / 64, azi_i / 64, s_km * 1000.0
    a = solve(lat, 15.0, azi, s, n=300).end_cartesian
    b = solve(-lat, 15.0, 180 - azi, s, n=300).end_cartesian
    assert dist(a, (b[0], b[1], -b[2])) <= 1e-9


def test_cartesian_crosses_pole():
    r = solve(80, 30, 0, 4e6, n=1000)
    assert abs(r.end_geodetic.lon - (30 - 180)) < 1e-9
    assert r.alpha1 == pytest.approx(180, abs=1e-9)


def test_geodetic_start_near_pole_refused():
    with pytest.raises(PoleSingularityError):
        solve(89.95, 0, 10, 1e5, "geodetic")


def test_geodetic_through_pole_fails():
    with pytest.raises(PoleSingularityError):
        solve(80, 0, 0, 4e6, "geodetic", 1000)


def test_geodetic_high_latitude_warns():
    with pytest.warns(SafeDomainWarning):
        r = solve(84, 0, 30, 1e6, "geodetic", 200)
    assert WARN_HIGH_LATITUDE in r.diagnostics.warnings


def test_geodetic_safe_domain_is_silent():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        r = solve(40, 0, 60, 5e6, "geodetic", 500)
    assert r.diagnostics.warnings == ()


def test_convergence_order_near_four():
    rep = convergence_study(WGS84, DirectProblem((30, 0), 60, 1e7), [250, 500, 1000, 100000])
    assert rep.n_list == (250, 500, 1000, 100000)
    assert all(3.5 <= o <= 4.5 for o in rep.orders[:2])
    assert not any(rep.flagged)


def test_convergence_degenerate_and_short_list():
    rep = convergence_study(WGS84, DirectProblem((0, 0), 10, 0.0), [10, 20, 40])
    assert rep.degenerate and rep.orders == (None,)
    with pytest.raises(ValueError):
        convergence_study(WGS84, DirectProblem((0, 0), 10, 1.0), [10, 20, 20])

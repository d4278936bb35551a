"""Geodesic equations in geodetic coordinates (latitude, longitude).

The second-order system is carried as four first-order equations in the
state ``(phi, dphi/ds, lam, dlam/ds)``. All angles here are radians; the
azimuth helpers return degrees.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .errors import DegenerateStateError, PoleSingularityError
from .spheroid import Ellipsoid, meridian_radius, normalize_azimuth, prime_vertical_radius

__all__ = [
    "GeodeticState",
    "MetricCoefficients",
    "ChristoffelTriple",
    "first_fundamental_form",
    "christoffel",
    "geodetic_rhs",
    "initial_geodetic_state",
    "azimuth_geodetic",
    "clairaut_geodetic",
    "clairaut_from_azimuth",
    "unit_speed_geodetic",
]

HALF_PI = math.pi / 2


class GeodeticState(NamedTuple):
    phi: float
    dphi: float
    lam: float
    dlam: float


class MetricCoefficients(NamedTuple):
    E: float
    F: float
    G: float


class ChristoffelTriple(NamedTuple):
    g111: float
    g122: float
    g212: float


def first_fundamental_form(ell: Ellipsoid, phi: float) -> MetricCoefficients:
    s, c = math.sin(phi), math.cos(phi)
    w = 1 - ell.e2 * s * s
    a2 = ell.a * ell.a
    omw = 1 - ell.e2
    if abs(phi) == HALF_PI:
        c = 0.0
    return MetricCoefficients(a2 * omw * omw / (w * w * w), 0.0, a2 * c * c / w)


def _check_pole(phi, step=None):
    if np.any(np.abs(phi) >= HALF_PI):
        raise PoleSingularityError(
            "geodetic formulation is singular at the poles (|phi| >= pi/2); "
            "use the cartesian system",
            step=step,
        )


def christoffel(ell: Ellipsoid, phi: float) -> ChristoffelTriple:
    """Non-zero Christoffel symbols (G^1_11, G^1_22, G^2_12) at latitude ``phi``."""
    _check_pole(phi)
    e2 = ell.e2
    s = math.sin(phi)
    s2p = math.sin(2 * phi)
    w = 1 - e2 * s * s
    return ChristoffelTriple(
        3 * e2 * s2p / (2 * w),
        w * s2p / (2 * (1 - e2)),
        -(1 - e2) * math.tan(phi) / w,
    )


def geodetic_rhs(ell: Ellipsoid, st) -> np.ndarray:
    """Right-hand side of the four first-order geodesic equations.

    ``st`` may be a single state of shape (4,) or a batch of shape (4, k).
    """
    phi, dphi, _, dlam = st[0], st[1], st[2], st[3]
    _check_pole(phi)
    e2 = ell.e2
    s = np.sin(phi)
    s2p = np.sin(2 * phi)
    w = 1 - e2 * s * s
    g111 = 3 * e2 * s2p / (2 * w)
    g122 = w * s2p / (2 * (1 - e2))
    g212 = -(1 - e2) * np.tan(phi) / w
    return np.array(
        [dphi, -g111 * dphi * dphi - g122 * dlam * dlam, dlam, -2 * g212 * dphi * dlam]
    )


def initial_geodetic_state(
    ell: Ellipsoid, phi0: float, lam0: float, alpha0: float
) -> GeodeticState:
    """Starting state for azimuth ``alpha0`` at (``phi0``, ``lam0``), all radians."""
    if abs(phi0) >= HALF_PI:
        raise PoleSingularityError(
            "cannot start a geodetic-coordinate integration at a pole; "
            "use the cartesian system"
        )
    sa, ca = math.sin(alpha0), math.cos(alpha0)
    return GeodeticState(
        phi0,
        ca / meridian_radius(ell, phi0),
        lam0,
        sa / (prime_vertical_radius(ell, phi0) * math.cos(phi0)),
    )


def azimuth_geodetic(ell: Ellipsoid, st) -> float:
    """Azimuth in degrees, [0, 360), of the direction carried by ``st``."""
    phi, dphi, _, dlam = st
    u = meridian_radius(ell, phi) * dphi
    v = prime_vertical_radius(ell, phi) * math.cos(phi) * dlam
    if u == 0 and v == 0:
        raise DegenerateStateError("state has zero direction vector")
    return normalize_azimuth(math.degrees(math.atan2(v, u)))


def clairaut_geodetic(ell: Ellipsoid, st) -> float:
    """Clairaut constant G(phi) * dlam/ds of a state, in metres."""
    return first_fundamental_form(ell, st[0]).G * st[3]


def clairaut_from_azimuth(ell: Ellipsoid, phi: float, alpha: float) -> float:
    """Clairaut constant N cos(phi) sin(alpha) from latitude and azimuth (radians)."""
    return prime_vertical_radius(ell, phi) * math.cos(phi) * math.sin(alpha)


def unit_speed_geodetic(ell: Ellipsoid, st) -> float:
    """E dphi^2 + G dlam^2; equals 1 for an arc-length parametrised state."""
    m = first_fundamental_form(ell, st[0])
    return m.E * st[1] * st[1] + m.G * st[3] * st[3]

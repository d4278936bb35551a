"""Ellipsoid of revolution: radii of curvature, coordinate conversions and
the implicit surface equation.

Angles at the public boundary (``GeodeticCoord``) are in degrees; the radius
functions take radians.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import DomainError, EllipsoidError

__all__ = [
    "Ellipsoid",
    "GeodeticCoord",
    "CartesianCoord",
    "WGS84",
    "make_ellipsoid",
    "prime_vertical_radius",
    "meridian_radius",
    "geodetic_to_cartesian",
    "cartesian_to_geodetic",
    "surface_residual",
    "sincosd",
    "wrap_longitude",
    "normalize_azimuth",
]


@dataclass(frozen=True)
class Ellipsoid:
    """Oblate spheroid with major semiaxis ``a`` (m) and flattening ``f``.

    ``e2`` (first eccentricity squared) and ``b`` (minor semiaxis) are derived
    at construction. ``f = 0`` gives a sphere of radius ``a``.
    """

    a: float
    f: float
    e2: float = field(init=False)
    b: float = field(init=False)

    def __post_init__(self):
        a, f = self.a, self.f
        for name, value in (("a", a), ("f", f)):
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise EllipsoidError(name, f"expected a real number, got {value!r}")
            if not math.isfinite(value):
                raise EllipsoidError(name, f"must be finite, got {value!r}")
        if a <= 0:
            raise EllipsoidError("a", f"major semiaxis must be positive, got {a!r}")
        if not 0 <= f < 1:
            raise EllipsoidError("f", f"flattening must lie in [0, 1), got {f!r}")
        e2 = f * (2 - f)
        object.__setattr__(self, "a", float(a))
        object.__setattr__(self, "f", float(f))
        object.__setattr__(self, "e2", e2)
        object.__setattr__(self, "b", a * math.sqrt(1 - e2))

    @property
    def is_sphere(self) -> bool:
        return self.f == 0


def make_ellipsoid(a: float, f: float) -> Ellipsoid:
    return Ellipsoid(a, f)


WGS84 = Ellipsoid(6378137.0, 1 / 298.257223563)


class GeodeticCoord(NamedTuple):
    """Geodetic latitude and longitude in degrees."""

    lat: float
    lon: float

    @classmethod
    def checked(cls, lat: float, lon: float) -> "GeodeticCoord":
        if not (math.isfinite(lat) and math.isfinite(lon)):
            raise DomainError(f"non-finite coordinate ({lat!r}, {lon!r})")
        if not -90 <= lat <= 90:
            raise DomainError(f"latitude {lat!r} outside [-90, 90]")
        if not -180 < lon <= 180:
            raise DomainError(f"longitude {lon!r} outside (-180, 180]")
        return cls(float(lat), float(lon))


class CartesianCoord(NamedTuple):
    """Earth-centred Cartesian position in metres."""

    x: float
    y: float
    z: float


def sincosd(deg: float) -> tuple[float, float]:
    """Sine and cosine of an angle in degrees.

    The argument is reduced exactly to [-45, 45] before conversion to radians,
    so multiples of 90 give exact results and ``sincosd(-x)``, ``sincosd(180 - x)``
    are exact reflections of ``sincosd(x)``.
    """
    r = math.fmod(deg, 360.0)
    q = 0 if math.isnan(r) else int(round(r / 90))
    r = math.radians(r - 90 * q)
    s, c = math.sin(r), math.cos(r)
    q %= 4
    if q == 1:
        s, c = c, -s
    elif q == 2:
        s, c = -s, -c
    elif q == 3:
        s, c = -c, s
    return s + 0.0, c + 0.0


def wrap_longitude(lon: float) -> float:
    """Reduce a longitude in degrees to (-180, 180]."""
    w = math.fmod(lon, 360.0)
    if w <= -180:
        w += 360
    elif w > 180:
        w -= 360
    return w + 0.0


def normalize_azimuth(deg: float) -> float:
    """Reduce an azimuth in degrees to [0, 360)."""
    w = math.fmod(deg, 360.0)
    if w < 0:
        w += 360
    # fmod of a tiny negative number can round back up to 360
    return 0.0 if w >= 360 else w + 0.0


def prime_vertical_radius(ell: Ellipsoid, lat: float) -> float:
    """Radius of curvature in the prime vertical, N = a / sqrt(1 - e2 sin^2 lat)."""
    s = math.sin(lat)
    return ell.a / math.sqrt(1 - ell.e2 * s * s)


def meridian_radius(ell: Ellipsoid, lat: float) -> float:
    """Radius of curvature in the meridian, M = a (1 - e2) / (1 - e2 sin^2 lat)^(3/2)."""
    s = math.sin(lat)
    w = 1 - ell.e2 * s * s
    return ell.a * (1 - ell.e2) / (w * math.sqrt(w))


def _radii_from_sin(ell: Ellipsoid, s: float) -> float:
    return ell.a / math.sqrt(1 - ell.e2 * s * s)


def geodetic_to_cartesian(ell: Ellipsoid, g: GeodeticCoord) -> CartesianCoord:
    """Surface point with geodetic coordinates ``g`` (degrees) in Cartesian form."""
    sphi, cphi = sincosd(g.lat)
    slam, clam = sincosd(g.lon)
    n = _radii_from_sin(ell, sphi)
    return CartesianCoord(n * cphi * clam, n * cphi * slam, n * (1 - ell.e2) * sphi)


def surface_residual(ell: Ellipsoid, c) -> float:
    """Implicit surface equation normalised by a^2.

    Returns (x^2 + y^2)/a^2 + z^2/(a^2 (1 - e2)) - 1, which is zero on the
    surface. Works elementwise on arrays as well.
    """
    x, y, z = c[0] / ell.a, c[1] / ell.a, c[2] / ell.a
    return x * x + y * y + z * z / (1 - ell.e2) - 1


def cartesian_to_geodetic(
    ell: Ellipsoid, c: CartesianCoord, max_residual: float = 1e-6
) -> GeodeticCoord:
    """Geodetic coordinates (degrees) of a point on (or very near) the surface.

    Points slightly off the surface are mapped to the latitude of their
    surface normal foot point.

    Raises
    ------
    DomainError
        If the normalised surface residual exceeds ``max_residual``.
    """
    x, y, z = (float(v) for v in c)
    res = surface_residual(ell, (x, y, z))
    if not math.isfinite(res) or abs(res) > max_residual:
        raise DomainError(f"point {c!r} is not on the surface (residual {res:.3e})")
    p = math.hypot(x, y)
    if p == 0:
        return GeodeticCoord(90.0 if z >= 0 else -90.0, 0.0)
    e2 = ell.e2
    # exact on the surface; the iteration absorbs a small height
    lat = math.atan2(z, (1 - e2) * p)
    for _ in range(10):
        s = math.sin(lat)
        nxt = math.atan2(z + e2 * _radii_from_sin(ell, s) * s, p)
        done = abs(nxt - lat) < 1e-15
        lat = nxt
        if done:
            break
    return GeodeticCoord(math.degrees(lat), wrap_longitude(math.degrees(math.atan2(y, x))))

"""Geodesic equations in Cartesian coordinates.

The state is ``(x, y, z, dx/ds, dy/ds, dz/ds)``. A geodesic's principal
normal is the surface normal, which gives the acceleration ``-(h/H) *
(x, y, z/(1-e2))`` with the curvature scalars ``H`` and ``h`` below. The
formulation has no singular points anywhere on the surface; only the local
frame used to translate azimuths needs a convention at the poles.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .errors import DegenerateStateError, DomainError, FrameError
from .spheroid import Ellipsoid, normalize_azimuth, surface_residual

__all__ = [
    "CartesianState",
    "FrameVectors",
    "CurvatureScalars",
    "POLE_THRESHOLD",
    "curvature_scalars",
    "cartesian_rhs",
    "surface_normal",
    "east_vector",
    "north_vector",
    "local_frame",
    "initial_cartesian_state",
    "initial_state_from_sincos",
    "azimuth_cartesian",
    "clairaut_cartesian",
    "tangency_residual",
]

# relative distance from the rotation axis below which a point counts as a pole
POLE_THRESHOLD = 1e-9


class CartesianState(NamedTuple):
    x: float
    y: float
    z: float
    xd: float
    yd: float
    zd: float


class FrameVectors(NamedTuple):
    n: np.ndarray
    p: np.ndarray
    q: np.ndarray


class CurvatureScalars(NamedTuple):
    H: float
    h: float


def curvature_scalars(ell: Ellipsoid, st) -> CurvatureScalars:
    x, y, z, xd, yd, zd = st
    omw = 1 - ell.e2
    zs = z / omw
    return CurvatureScalars(x * x + y * y + zs * zs, xd * xd + yd * yd + zd * zd / omw)


def cartesian_rhs(ell: Ellipsoid, st) -> np.ndarray:
    """Right-hand side of the six first-order geodesic equations.

    Accepts a single state (6,) or a batch (6, k). The derivative is laid
    out like the state: velocities first, then accelerations.
    """
    x, y, z, xd, yd, zd = st
    omw = 1 - ell.e2
    zs = z / omw
    k = (xd * xd + yd * yd + zd * zd / omw) / (x * x + y * y + zs * zs)
    return np.array([xd, yd, zd, -k * x, -k * y, -k * zs])


def surface_normal(ell: Ellipsoid, c) -> np.ndarray:
    """Outward unit normal at a surface point."""
    x, y, z = c[0], c[1], c[2]
    zs = z / (1 - ell.e2)
    r = math.sqrt(x * x + y * y + zs * zs)
    return np.array([x / r, y / r, zs / r])


def east_vector(c, pole_longitude: float = 0.0) -> np.ndarray:
    """Unit vector tangent to the parallel through ``c``, pointing east.

    At a pole, where the parallel degenerates, the vector of the meridian with
    longitude ``pole_longitude`` (radians) is used: (-sin, cos, 0). With the
    default of zero this is (0, 1, 0).
    """
    x, y, z = c[0], c[1], c[2]
    rho2 = x * x + y * y
    if rho2 <= (POLE_THRESHOLD * POLE_THRESHOLD) * (rho2 + z * z):
        return np.array([-math.sin(pole_longitude), math.cos(pole_longitude), 0.0])
    rho = math.sqrt(rho2)
    return np.array([-y / rho, x / rho, 0.0])


def north_vector(n, p, tol: float = 1e-12) -> np.ndarray:
    """q = n x p, the unit vector tangent to the meridian pointing north."""
    n = np.asarray(n, dtype=float)
    p = np.asarray(p, dtype=float)
    if abs(n @ n - 1) > tol or abs(p @ p - 1) > tol or abs(n @ p) > tol:
        raise FrameError(f"n={n!r}, p={p!r} are not an orthonormal pair")
    # reduces to (-n3 p2, n3 p1, n1 p2 - n2 p1) for the horizontal east vector
    return np.array(
        [
            n[1] * p[2] - n[2] * p[1],
            n[2] * p[0] - n[0] * p[2],
            n[0] * p[1] - n[1] * p[0],
        ]
    )


def local_frame(ell: Ellipsoid, c, pole_longitude: float = 0.0) -> FrameVectors:
    n = surface_normal(ell, c)
    p = east_vector(c, pole_longitude)
    return FrameVectors(n, p, north_vector(n, p))


def initial_cartesian_state(
    ell: Ellipsoid, c, alpha0: float, pole_longitude: float = 0.0
) -> CartesianState:
    """Starting state at surface point ``c`` heading in azimuth ``alpha0`` (radians).

    Raises
    ------
    DomainError
        If ``c`` is not on the surface to within 1e-12 (normalised residual).
    """
    res = surface_residual(ell, c)
    if not abs(res) <= 1e-12:
        raise DomainError(f"start point {tuple(c)!r} is off the surface (residual {res:.3e})")
    return initial_state_from_sincos(
        ell, c, math.sin(alpha0), math.cos(alpha0), pole_longitude
    )


def initial_state_from_sincos(
    ell: Ellipsoid, c, sin_alpha: float, cos_alpha: float, pole_longitude: float = 0.0
) -> CartesianState:
    """As :func:`initial_cartesian_state`, with the azimuth given by its sine and cosine."""
    _, p, q = local_frame(ell, c, pole_longitude)
    d = p * sin_alpha + q * cos_alpha
    return CartesianState(float(c[0]), float(c[1]), float(c[2]), float(d[0]), float(d[1]), float(d[2]))


def azimuth_cartesian(ell: Ellipsoid, st, pole_longitude: float = 0.0) -> float:
    """Azimuth in degrees, [0, 360), of the tangent carried by ``st``."""
    c = st[:3]
    sigma = np.array(st[3:], dtype=float)
    _, p, q = local_frame(ell, c, pole_longitude)
    big_q = q @ sigma
    big_r = p @ sigma
    if big_q == 0 and big_r == 0:
        raise DegenerateStateError("state has no tangential direction component")
    return normalize_azimuth(math.degrees(math.atan2(big_r, big_q)))


def clairaut_cartesian(st) -> float:
    """First integral x dy/ds - y dx/ds, in metres."""
    return st[0] * st[4] - st[1] * st[3]


def tangency_residual(ell: Ellipsoid, st) -> float:
    """(x dx/ds + y dy/ds + z dz/ds / (1-e2)) / a; zero for tangent directions."""
    return (st[0] * st[3] + st[1] * st[4] + st[2] * st[5] / (1 - ell.e2)) / ell.a

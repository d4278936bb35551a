"""Geodesics on an oblate spheroid as initial value problems.

The direct problem (start point, azimuth, arc length -> end point, end
azimuth) is solved by fixed-step RK4 integration of either the geodesic
equations in geodetic coordinates or the regular Cartesian system, which has
no pole singularity.

>>> from geodesic_ivp import WGS84, DirectProblem, solve_direct
>>> r = solve_direct(WGS84, DirectProblem((0.0, 0.0), 90.0, 1000.0))
>>> round(r.end_geodetic.lon, 9)
0.008983153
"""

from .errors import (
    DegenerateStateError,
    DomainError,
    EllipsoidError,
    FrameError,
    GeodesicError,
    NumericOverflowError,
    PoleSingularityError,
    SafeDomainWarning,
    TestsetParseError,
)
from .solver import (
    ConvergenceReport,
    Diagnostics,
    DirectProblem,
    DirectResult,
    TraceSample,
    clairaut_constant,
    convergence_study,
    select_steps,
    solve_direct,
    trace_direct,
)
from .spheroid import (
    WGS84,
    CartesianCoord,
    Ellipsoid,
    GeodeticCoord,
    cartesian_to_geodetic,
    geodetic_to_cartesian,
    make_ellipsoid,
)

__version__ = "0.1.0"

__all__ = [
    "WGS84",
    "Ellipsoid",
    "make_ellipsoid",
    "GeodeticCoord",
    "CartesianCoord",
    "geodetic_to_cartesian",
    "cartesian_to_geodetic",
    "DirectProblem",
    "DirectResult",
    "Diagnostics",
    "TraceSample",
    "ConvergenceReport",
    "solve_direct",
    "trace_direct",
    "convergence_study",
    "select_steps",
    "clairaut_constant",
    "GeodesicError",
    "EllipsoidError",
    "DomainError",
    "PoleSingularityError",
    "DegenerateStateError",
    "FrameError",
    "NumericOverflowError",
    "TestsetParseError",
    "SafeDomainWarning",
]

"""Direct geodesic problem: given a start point, azimuth and arc length, find
the end point and end azimuth by integrating either geodesic system.

The Cartesian system is the default; it is regular everywhere, including at
the poles. The geodetic system is available for comparison and refuses to
start within 0.1 degree of a pole.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import _kernels
from .cartesian_ode import azimuth_cartesian, clairaut_cartesian, initial_state_from_sincos
from .errors import NumericOverflowError, PoleSingularityError, SafeDomainWarning
from .geodetic_ode import (
    azimuth_geodetic,
    clairaut_geodetic,
    initial_geodetic_state,
)
from .spheroid import (
    CartesianCoord,
    Ellipsoid,
    GeodeticCoord,
    cartesian_to_geodetic,
    geodetic_to_cartesian,
    normalize_azimuth,
    prime_vertical_radius,
    sincosd,
    wrap_longitude,
)

__all__ = [
    "SYSTEMS",
    "DEFAULT_TARGET_DS",
    "DirectProblem",
    "Diagnostics",
    "DirectResult",
    "TraceSample",
    "ConvergenceReport",
    "select_steps",
    "solve_direct",
    "trace_direct",
    "convergence_study",
    "clairaut_constant",
]

SYSTEMS = ("cartesian", "geodetic")
DEFAULT_TARGET_DS = 10_000.0
MIN_STEPS = 16
MAX_STEPS = 2**20
GEODETIC_START_LIMIT = 89.9
GEODETIC_WARN_LAT = 85.0

WARN_HIGH_LATITUDE = "geodetic-latitude-above-85"

# coarse step counts drift off the surface; the drift is reported, not rejected
_OUTPUT_RESIDUAL = 1e-2


@dataclass(frozen=True)
class DirectProblem:
    """Start point (degrees), start azimuth (degrees), arc length (m).

    ``start`` may be given as any ``(lat, lon)`` pair; the longitude is
    reduced to (-180, 180] and the azimuth to [0, 360).
    """

    start: GeodeticCoord
    alpha0: float
    s01: float
    system: str = "cartesian"
    n: Optional[int] = None

    def __post_init__(self):
        lat, lon = self.start
        object.__setattr__(
            self, "start", GeodeticCoord.checked(float(lat), wrap_longitude(float(lon)))
        )
        if not math.isfinite(self.alpha0):
            raise ValueError(f"alpha0 must be finite, got {self.alpha0!r}")
        object.__setattr__(self, "alpha0", normalize_azimuth(float(self.alpha0)))
        if not math.isfinite(self.s01) or self.s01 < 0:
            raise ValueError(f"s01 must be finite and >= 0, got {self.s01!r}")
        if self.system not in SYSTEMS:
            raise ValueError(f"system must be one of {SYSTEMS}, got {self.system!r}")
        if self.n is not None and (int(self.n) != self.n or self.n < 1):
            raise ValueError(f"n must be a positive integer, got {self.n!r}")

    @property
    def steps(self) -> int:
        return int(self.n) if self.n is not None else select_steps(self.s01)


@dataclass(frozen=True)
class Diagnostics:
    """Precision diagnostics gathered at the start and after every step.

    ``max_abs_surface_residual`` and ``max_abs_tangency_residual`` exist only
    for the Cartesian system; ``max_unit_speed_drift`` only for the geodetic.
    """

    clairaut_c0: float
    max_abs_delta_c: float
    clairaut_c1: Optional[float] = None
    max_abs_surface_residual: Optional[float] = None
    max_abs_tangency_residual: Optional[float] = None
    max_unit_speed_drift: Optional[float] = None
    warnings: tuple = ()


@dataclass(frozen=True)
class DirectResult:
    end_geodetic: GeodeticCoord
    end_cartesian: CartesianCoord
    alpha1: float
    diagnostics: Diagnostics
    n: int
    lon_unwrapped: float


@dataclass(frozen=True)
class TraceSample:
    s: float
    position: CartesianCoord
    geodetic: GeodeticCoord
    alpha: float
    delta_c: float
    lon_unwrapped: float


def select_steps(s01: float, target_ds: float = DEFAULT_TARGET_DS) -> int:
    """Number of steps giving a step length of at most ``target_ds``, clamped to [16, 2**20]."""
    if s01 < 0 or not target_ds > 0:
        raise ValueError("need s01 >= 0 and target_ds > 0")
    return int(min(max(math.ceil(s01 / target_ds), MIN_STEPS), MAX_STEPS))


def clairaut_constant(ell: Ellipsoid, lat: float, azimuth: float) -> float:
    """Clairaut constant N cos(lat) sin(azimuth), angles in degrees."""
    sphi, cphi = sincosd(lat)
    sa, _ = sincosd(azimuth)
    return prime_vertical_radius(ell, math.radians(lat)) * cphi * sa


@dataclass
class _Run:
    y: np.ndarray
    diag: np.ndarray
    samples: np.ndarray
    n: int
    ds: float
    c0: float
    warnings: list = field(default_factory=list)


def _run(ell: Ellipsoid, prob: DirectProblem, stride: int) -> _Run:
    n = prob.steps
    ds = prob.s01 / n
    rows = 0
    if stride > 0:
        rows = n // stride + 1 + (1 if n % stride else 0)
    samples = np.empty((rows, 6 if prob.system == "cartesian" else 4))
    lat0, lon0 = prob.start
    if prob.system == "cartesian":
        c = geodetic_to_cartesian(ell, prob.start)
        sa, ca = sincosd(prob.alpha0)
        y0 = np.array(initial_state_from_sincos(ell, c, sa, ca, math.radians(lon0)))
        c0 = math.hypot(c.x, c.y) * sa
        y, diag, status, step = _kernels.cartesian_run(
            y0, ds, n, ell.a, ell.e2, c0, stride, samples
        )
    else:
        if abs(lat0) >= GEODETIC_START_LIMIT:
            raise PoleSingularityError(
                f"start latitude {lat0} is within {90 - GEODETIC_START_LIMIT:g} deg of a pole; "
                "the geodetic system is singular there, use the cartesian system"
            )
        y0 = np.array(
            initial_geodetic_state(
                ell, math.radians(lat0), math.radians(lon0), math.radians(prob.alpha0)
            )
        )
        c0 = clairaut_constant(ell, lat0, prob.alpha0)
        y, diag, status, step = _kernels.geodetic_run(
            y0, ds, n, ell.a, ell.e2, c0, stride, samples
        )
    if status == _kernels.NONFINITE:
        raise NumericOverflowError(step)
    if status == _kernels.POLE:
        raise PoleSingularityError(
            f"geodetic trajectory reached a pole in step {step}; use the cartesian system",
            step=step,
        )
    run = _Run(y, diag, samples, n, ds, c0)
    if prob.system == "geodetic" and math.degrees(diag[2]) > GEODETIC_WARN_LAT:
        run.warnings.append(WARN_HIGH_LATITUDE)
        warnings.warn(
            f"geodetic trajectory reached latitude {math.degrees(diag[2]):.3f} deg; "
            "results beyond 85 deg are unreliable in this system",
            SafeDomainWarning,
            stacklevel=3,
        )
    return run


def _geodetic_output(y) -> tuple[GeodeticCoord, float]:
    lon = math.degrees(y[2])
    return GeodeticCoord(math.degrees(y[0]), wrap_longitude(lon)), lon


def _zero_length(ell: Ellipsoid, prob: DirectProblem) -> DirectResult:
    lat0, lon0 = prob.start
    c = geodetic_to_cartesian(ell, prob.start)
    if prob.system == "cartesian":
        c0 = math.hypot(c.x, c.y) * sincosd(prob.alpha0)[0]
    else:
        c0 = clairaut_constant(ell, lat0, prob.alpha0)
    diag = Diagnostics(
        clairaut_c0=c0,
        max_abs_delta_c=0.0,
        clairaut_c1=c0,
        max_abs_surface_residual=0.0 if prob.system == "cartesian" else None,
        max_abs_tangency_residual=0.0 if prob.system == "cartesian" else None,
        max_unit_speed_drift=0.0 if prob.system == "geodetic" else None,
    )
    return DirectResult(prob.start, c, prob.alpha0, diag, 0, lon0)


def solve_direct(ell: Ellipsoid, prob: DirectProblem) -> DirectResult:
    """Solve the direct problem.

    Raises
    ------
    PoleSingularityError
        Geodetic system only: start within 0.1 deg of a pole, or the
        trajectory reaching a pole.
    NumericOverflowError
        If the integration produced non-finite values.
    """
    if prob.s01 == 0:
        return _zero_length(ell, prob)
    run = _run(ell, prob, 0)
    y = run.y
    if prob.system == "cartesian":
        pos = CartesianCoord(*(float(v) for v in y[:3]))
        end = cartesian_to_geodetic(ell, pos, _OUTPUT_RESIDUAL)
        alpha1 = azimuth_cartesian(ell, y, math.radians(end.lon))
        diag = Diagnostics(
            clairaut_c0=run.c0,
            max_abs_delta_c=float(run.diag[0]),
            clairaut_c1=float(clairaut_cartesian(y)),
            max_abs_surface_residual=float(run.diag[1]),
            max_abs_tangency_residual=float(run.diag[2]),
            warnings=tuple(run.warnings),
        )
        return DirectResult(end, pos, alpha1, diag, run.n, end.lon)
    end, lon_unwrapped = _geodetic_output(y)
    diag = Diagnostics(
        clairaut_c0=run.c0,
        max_abs_delta_c=float(run.diag[0]),
        clairaut_c1=float(clairaut_geodetic(ell, y)),
        max_unit_speed_drift=float(run.diag[1]),
        warnings=tuple(run.warnings),
    )
    return DirectResult(
        end,
        geodetic_to_cartesian(ell, end),
        azimuth_geodetic(ell, y),
        diag,
        run.n,
        lon_unwrapped,
    )


def trace_direct(ell: Ellipsoid, prob: DirectProblem, every_k: int = 1) -> list[TraceSample]:
    """Sample the geodesic at steps 0, k, 2k, ... and always at the last step."""
    if int(every_k) != every_k or every_k < 1:
        raise ValueError(f"every_k must be a positive integer, got {every_k!r}")
    if prob.s01 == 0:
        r = _zero_length(ell, prob)
        return [TraceSample(0.0, r.end_cartesian, r.end_geodetic, r.alpha1, 0.0, r.lon_unwrapped)]
    run = _run(ell, prob, int(every_k))
    steps = list(range(0, run.n + 1, every_k))
    if steps[-1] != run.n:
        steps.append(run.n)
    out = []
    if prob.system == "cartesian":
        geo = [
            cartesian_to_geodetic(ell, CartesianCoord(*row[:3]), _OUTPUT_RESIDUAL)
            for row in run.samples
        ]
        unwrapped = np.degrees(np.unwrap(np.radians([g.lon for g in geo])))
        for i, row, g, lu in zip(steps, run.samples, geo, unwrapped):
            out.append(
                TraceSample(
                    i * run.ds,
                    CartesianCoord(*(float(v) for v in row[:3])),
                    g,
                    azimuth_cartesian(ell, row, math.radians(g.lon)),
                    float(clairaut_cartesian(row) - run.c0),
                    float(lu),
                )
            )
    else:
        for i, row in zip(steps, run.samples):
            g, lu = _geodetic_output(row)
            out.append(
                TraceSample(
                    i * run.ds,
                    geodetic_to_cartesian(ell, g),
                    g,
                    azimuth_geodetic(ell, row),
                    float(clairaut_geodetic(ell, row) - run.c0),
                    lu,
                )
            )
    return out


@dataclass(frozen=True)
class ConvergenceReport:
    """Endpoint error of each step count against the largest one.

    ``orders[i]`` is the observed order between ``n_list[i]`` and
    ``n_list[i + 1]``; it is None when either error is zero.
    """

    n_list: tuple
    errors: tuple
    orders: tuple
    flagged: tuple
    warnings: tuple
    band: tuple = (3.5, 4.5)

    @property
    def degenerate(self) -> bool:
        return all(e == 0 for e in self.errors)


def convergence_study(
    ell: Ellipsoid,
    prob: DirectProblem,
    n_list: Sequence[int],
    band: tuple = (3.5, 4.5),
) -> ConvergenceReport:
    """Observed order of accuracy from a sweep of step counts.

    The solution at ``max(n_list)`` is the reference; the errors of the
    others are endpoint distances (m) from it.
    """
    ns = sorted(set(int(n) for n in n_list))
    if len(ns) < 3:
        raise ValueError("need at least three distinct step counts")
    codes: list = []
    ends = {}
    for n in ns:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", SafeDomainWarning)
            r = solve_direct(ell, DirectProblem(prob.start, prob.alpha0, prob.s01, prob.system, n))
        codes.extend(c for c in r.diagnostics.warnings if c not in codes)
        ends[n] = np.array(r.end_cartesian)
    ref = ends[ns[-1]]
    errors = tuple(float(np.linalg.norm(ends[n] - ref)) for n in ns[:-1])
    orders = []
    for (n1, e1), (n2, e2) in zip(zip(ns, errors), zip(ns[1:], errors[1:])):
        if e1 == 0 or e2 == 0:
            orders.append(None)
        else:
            orders.append(math.log(e1 / e2) / math.log(n2 / n1))
    flagged = tuple(o is not None and not band[0] <= o <= band[1] for o in orders)
    return ConvergenceReport(tuple(ns), errors, tuple(orders), flagged, tuple(codes), band)

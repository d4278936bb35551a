"""Reference geodesic test sets: reading, grouping, per-record error metrics
and group-wise aggregation.

The file layout is GeographicLib's GeodTest: one geodesic per line, at least
seven whitespace-separated decimals ``lat1 lon1 azi1 lat2 lon2 azi2 s12``
(the published file carries three more columns, which are ignored). Records
are identified by their 1-based line number. The published set has nine
groups of consecutive ids (the first twice as large as the rest); a sample
built with the same layout but ``group_size`` records per group can be
classified by passing that size.
"""

from __future__ import annotations

import gzip
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, NamedTuple, Optional

from .errors import GeodesicError, PoleSingularityError, TestsetParseError
from .solver import DirectProblem, clairaut_constant, solve_direct
from .spheroid import Ellipsoid, GeodeticCoord, geodetic_to_cartesian, wrap_longitude

__all__ = [
    "PUBLISHED_GROUP_SIZE",
    "GROUP_CASES",
    "MAX_S01",
    "TestRecord",
    "RecordMetrics",
    "Extreme",
    "GroupStats",
    "Aggregate",
    "BenchResult",
    "parse_test_line",
    "read_testset",
    "classify_group",
    "in_geodetic_subset",
    "angle_difference",
    "evaluate_record",
    "reference_clairaut_mismatch",
    "aggregate",
    "run_bench",
]

PUBLISHED_GROUP_SIZE = 50_000
MAX_S01 = 20003931.4586254

GROUP_CASES = {
    1: "randomly distributed",
    2: "nearly antipodal",
    3: "short distances",
    4: "one end near a pole",
    5: "both ends near opposite poles",
    6: "nearly meridional",
    7: "nearly equatorial",
    8: "running between vertices",
    9: "ending close to vertices",
}

SKIP_POLE_GUARD = "pole-guard"


@dataclass(frozen=True)
class TestRecord:
    """One line of a test set; angles in degrees, distance in metres."""

    __test__ = False

    id: int
    phi0: float
    lam0: float
    alpha0: float
    phi1_ref: float
    lam1_ref: float
    alpha1_ref: float
    s01: float

    def conformance_warnings(self) -> list[str]:
        """Departures from the published set's input ranges (empty if conforming)."""
        out = []
        if not 0 <= self.phi0 <= 90:
            out.append(f"record {self.id}: phi0 {self.phi0} outside [0, 90]")
        if not 0 <= self.alpha0 <= 180:
            out.append(f"record {self.id}: alpha0 {self.alpha0} outside [0, 180]")
        if not 0 <= self.s01 <= MAX_S01:
            out.append(f"record {self.id}: s01 {self.s01} outside [0, {MAX_S01}]")
        return out

    def problem(self, system: str = "cartesian", n: Optional[int] = None) -> DirectProblem:
        return DirectProblem((self.phi0, self.lam0), self.alpha0, self.s01, system, n)


_FIELDS = ("phi0", "lam0", "alpha0", "phi1_ref", "lam1_ref", "alpha1_ref", "s01")


def parse_test_line(line: str, id: int) -> TestRecord:
    """Parse one test-set line; columns past the seventh are ignored."""
    parts = line.split()
    if len(parts) < 7:
        raise TestsetParseError(id, len(parts) + 1, f"expected 7 fields, found {len(parts)}")
    values = []
    for col, text in enumerate(parts[:7], start=1):
        try:
            v = float(text)
        except ValueError:
            raise TestsetParseError(id, col, f"{_FIELDS[col - 1]} is not a number: {text!r}") from None
        if not math.isfinite(v):
            raise TestsetParseError(id, col, f"{_FIELDS[col - 1]} is not finite: {text!r}")
        values.append(v)
    return TestRecord(id, *values)


def _open_text(path):
    path = Path(path)
    if path.suffix == ".gz":
        return gzip.open(path, "rt", encoding="ascii", newline=None)
    return open(path, "r", encoding="ascii", newline=None)


def iter_testset(path, every: int = 1, limit: Optional[int] = None) -> Iterator[TestRecord]:
    """Yield records from a (optionally gzipped) test-set file.

    ``every=k`` keeps lines 1, 1+k, 1+2k, ... so that a sparse sample of the
    published file still spans all groups; ids stay the true line numbers.
    Blank lines are skipped but still counted.
    """
    if every < 1:
        raise ValueError("every must be >= 1")
    count = 0
    with _open_text(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            if limit is not None and count >= limit:
                return
            if (lineno - 1) % every or not line.strip():
                continue
            yield parse_test_line(line, lineno)
            count += 1


def read_testset(path, every: int = 1, limit: Optional[int] = None) -> list[TestRecord]:
    return list(iter_testset(path, every, limit))


def classify_group(id: int, group_size: int = PUBLISHED_GROUP_SIZE) -> int:
    """Group (1-9) of a record id; ids past the last group stay in group 9."""
    if id < 1:
        raise ValueError(f"record id must be >= 1, got {id}")
    if id <= 2 * group_size:
        return 1
    return min(2 + (id - 2 * group_size - 1) // group_size, 9)


def in_geodetic_subset(rec: TestRecord) -> bool:
    """Whether a record stays clear of the poles and of meridional directions
    enough for the geodetic system (start and end below 85 deg latitude,
    azimuths within (1, 179) deg)."""
    return (
        rec.phi0 < 85
        and abs(rec.phi1_ref) < 85
        and 1 < rec.alpha0 < 179
        and 1 < rec.alpha1_ref < 179
    )


def angle_difference(a: float, b: float) -> float:
    """Signed a - b in degrees, reduced to [-180, 180)."""
    d = math.fmod(a - b, 360.0)
    if d >= 180:
        d -= 360
    elif d < -180:
        d += 360
    return d


def reference_clairaut_mismatch(ell: Ellipsoid, rec: TestRecord) -> float:
    """Clairaut constant at the reference end point minus the one at the start (m)."""
    return clairaut_constant(ell, rec.phi1_ref, rec.alpha1_ref) - clairaut_constant(
        ell, rec.phi0, rec.alpha0
    )


@dataclass(frozen=True)
class RecordMetrics:
    """End-point differences from the reference plus trajectory maxima.

    ``delta_alpha1`` is in arcseconds; ``max_abs_s`` is None for the
    geodetic system, which has no surface residual.
    """

    delta_r1: float
    delta_alpha1: float
    delta_c1: float
    max_abs_delta_c: float
    max_abs_s: Optional[float]


def evaluate_record(
    ell: Ellipsoid, rec: TestRecord, n: int, system: str = "cartesian"
) -> RecordMetrics:
    """Solve ``rec`` with ``n`` steps and compare with its reference end point.

    Solver errors are re-raised with a ``record_id`` attribute.
    """
    try:
        r = solve_direct(ell, rec.problem(system, n))
    except GeodesicError as exc:
        exc.record_id = rec.id
        raise
    ref = geodetic_to_cartesian(ell, GeodeticCoord(rec.phi1_ref, wrap_longitude(rec.lam1_ref)))
    d = r.diagnostics
    return RecordMetrics(
        delta_r1=math.dist(r.end_cartesian, ref),
        delta_alpha1=angle_difference(r.alpha1, rec.alpha1_ref) * 3600,
        delta_c1=d.clairaut_c1 - clairaut_constant(ell, rec.phi1_ref, rec.alpha1_ref),
        max_abs_delta_c=d.max_abs_delta_c,
        max_abs_s=d.max_abs_surface_residual,
    )


class Extreme(NamedTuple):
    value: float
    id: int

    def better(self, other: "Extreme") -> "Extreme":
        # larger value wins; ties go to the smaller id so the result is order-free
        if other.value > self.value or (other.value == self.value and other.id < self.id):
            return other
        return self


_NONE = Extreme(-math.inf, 0)
_STAT_FIELDS = (
    "max_delta_r1",
    "max_abs_delta_alpha1",
    "max_abs_delta_c1",
    "max_max_abs_delta_c",
    "max_max_abs_s",
)


@dataclass
class GroupStats:
    """Maxima (each with the id where it occurs) over one group of records.

    ``group`` is 0 for the all-groups row. Maxima are None while the group has
    no evaluated records.
    """

    group: int
    count: int = 0
    skipped: int = 0
    max_delta_r1: Extreme = _NONE
    max_abs_delta_alpha1: Extreme = _NONE
    max_abs_delta_c1: Extreme = _NONE
    max_max_abs_delta_c: Extreme = _NONE
    max_max_abs_s: Extreme = _NONE

    def add(self, id: int, m: RecordMetrics) -> None:
        self.count += 1
        values = (
            m.delta_r1,
            abs(m.delta_alpha1),
            abs(m.delta_c1),
            m.max_abs_delta_c,
            m.max_abs_s,
        )
        for name, v in zip(_STAT_FIELDS, values):
            if v is not None:
                setattr(self, name, getattr(self, name).better(Extreme(v, id)))

    def merge(self, other: "GroupStats") -> None:
        self.count += other.count
        self.skipped += other.skipped
        for name in _STAT_FIELDS:
            setattr(self, name, getattr(self, name).better(getattr(other, name)))

    def value(self, name: str) -> Optional[Extreme]:
        e = getattr(self, name)
        return None if e is _NONE or e.value == -math.inf else e


@dataclass
class Aggregate:
    """Group-wise statistics; partial aggregates over disjoint records merge exactly."""

    groups: dict = field(default_factory=dict)
    skips: list = field(default_factory=list)

    def _group(self, g: int) -> GroupStats:
        if g not in self.groups:
            self.groups[g] = GroupStats(g)
        return self.groups[g]

    def add(self, group: int, id: int, metrics: RecordMetrics) -> None:
        self._group(group).add(id, metrics)

    def add_skip(self, group: int, id: int, reason: str) -> None:
        self._group(group).skipped += 1
        self.skips.append((id, reason))

    def merge(self, other: "Aggregate") -> "Aggregate":
        for g, st in other.groups.items():
            self._group(g).merge(st)
        self.skips.extend(other.skips)
        return self

    @property
    def overall(self) -> GroupStats:
        total = GroupStats(0)
        for st in self.groups.values():
            total.merge(st)
        return total

    def rows(self) -> list[GroupStats]:
        return [self.groups[g] for g in sorted(self.groups)] + [self.overall]


def aggregate(stream: Iterable[tuple[int, int, RecordMetrics]]) -> Aggregate:
    """Fold ``(group, id, metrics)`` triples into per-group maxima."""
    agg = Aggregate()
    for group, id, metrics in stream:
        agg.add(group, id, metrics)
    return agg


@dataclass
class BenchResult:
    n: int
    system: str
    stats: Aggregate
    elapsed: float
    steps: int

    @property
    def steps_per_second(self) -> float:
        return self.steps / self.elapsed if self.elapsed > 0 else math.inf


def _evaluate_chunk(ell, records, n, system, group_size) -> tuple[Aggregate, int]:
    agg = Aggregate()
    steps = 0
    for rec in records:
        g = classify_group(rec.id, group_size)
        try:
            m = evaluate_record(ell, rec, n, system)
        except PoleSingularityError:
            if system != "geodetic":
                raise
            agg.add_skip(g, rec.id, SKIP_POLE_GUARD)
            continue
        steps += n if rec.s01 > 0 else 0
        agg.add(g, rec.id, m)
    return agg, steps


def run_bench(
    ell: Ellipsoid,
    records: list[TestRecord],
    n: int,
    system: str = "cartesian",
    group_size: int = PUBLISHED_GROUP_SIZE,
    workers: int = 1,
) -> BenchResult:
    """Evaluate every record at ``n`` steps and aggregate per group.

    With ``workers > 1`` the records are split into contiguous chunks and
    evaluated on a thread pool (the integration loops release the GIL); the
    partial aggregates are merged afterwards.
    """
    t0 = time.perf_counter()
    if workers <= 1 or len(records) < 2:
        agg, steps = _evaluate_chunk(ell, records, n, system, group_size)
    else:
        size = math.ceil(len(records) / workers)
        chunks = [records[i : i + size] for i in range(0, len(records), size)]
        agg, steps = Aggregate(), 0
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_evaluate_chunk, ell, c, n, system, group_size) for c in chunks
            ]
            for f in futures:
                part, k = f.result()
                agg.merge(part)
                steps += k
    return BenchResult(n, system, agg, time.perf_counter() - t0, steps)

import math
from pathlib import Path

import pytest

from geodesic_ivp import WGS84, Ellipsoid

DATA = Path(__file__).parent / "data"
SAMPLE = DATA / "GeodTest-sample.dat.gz"
SAMPLE_GROUP_SIZE = 1250


@pytest.fixture
def wgs84():
    return WGS84


@pytest.fixture
def unit_sphere():
    return Ellipsoid(1.0, 0.0)


def arcsec(deg):
    return deg * 3600.0


def isclose_deg(a, b, tol):
    d = math.fmod(a - b, 360.0)
    return min(abs(d), 360 - abs(d)) <= tol


ACCEPTANCE_LINES = []


def record_criterion(number: int, title: str, ok: bool, detail: str) -> None:
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} | {detail}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)

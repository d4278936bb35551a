"""Solve a few direct problems with both formulations and compare them.

Run: python demos/01_direct_problem.py
"""

import math

from geodesic_ivp import WGS84, DirectProblem, solve_direct

# Start points, azimuths and distances covering a short hop, an ocean crossing
# and a near-antipodal path.
cases = [
    ((52.0, 4.0), 80.0, 250_000.0),
    ((-33.9, 18.4), 250.0, 9_000_000.0),
    ((10.0, 0.0), 100.0, 19_900_000.0),
]

for start, azi, s in cases:
    print(f"start {start}, azimuth {azi} deg, s = {s / 1000:.0f} km")
    ends = {}
    for system in ("cartesian", "geodetic"):
        r = solve_direct(WGS84, DirectProblem(start, azi, s, system))
        ends[system] = r.end_cartesian
        print(
            f"  {system:9s} n={r.n:5d}  lat1={r.end_geodetic.lat:16.12f}  "
            f"lon1={r.end_geodetic.lon:17.12f}  azi1={r.alpha1:16.12f}"
        )
    print(f"  systems differ by {math.dist(ends['cartesian'], ends['geodetic']):.2e} m\n")

# The Cartesian system also starts at a pole. There the local east direction
# is taken along the meridian of the given start longitude.
r = solve_direct(WGS84, DirectProblem((90.0, 0.0), 30.0, 1_000_000.0))
print(f"from the north pole at azimuth 30: lat1={r.end_geodetic.lat:.9f}, lon1={r.end_geodetic.lon:.9f}")

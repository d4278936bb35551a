"""Watch the Clairaut constant along a long geodesic.

The product of the distance from the axis and the sine of the azimuth is
constant along any geodesic of a surface of revolution; the size of its
numerical drift is a cheap accuracy indicator that needs no reference
solution.

Run: python demos/02_clairaut_drift.py
"""

from geodesic_ivp import WGS84, DirectProblem, solve_direct, trace_direct

prob = DirectProblem((20.0, 0.0), 70.0, 15_000_000.0, n=1000)
trace = trace_direct(WGS84, prob, every_k=100)

print(f"{'s (km)':>9} {'lat':>12} {'lon':>12} {'azimuth':>12} {'delta C (m)':>12}")
for t in trace:
    print(
        f"{t.s / 1000:9.0f} {t.geodetic.lat:12.6f} {t.geodetic.lon:12.6f} "
        f"{t.alpha:12.6f} {t.delta_c:12.3e}"
    )

# Coarser steps drift more; RK4 should cut the drift roughly 16x per halving.
for n in (125, 250, 500, 1000):
    d = solve_direct(WGS84, DirectProblem(prob.start, prob.alpha0, prob.s01, n=n)).diagnostics
    print(f"n={n:5d}  max|delta C| = {d.max_abs_delta_c:.3e} m  max|S| = {d.max_abs_surface_residual:.1e}")

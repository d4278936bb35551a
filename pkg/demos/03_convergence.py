"""Observed order of accuracy of the fixed-step RK4 solution.

Run: python demos/03_convergence.py
"""

from geodesic_ivp import WGS84, DirectProblem, convergence_study

prob = DirectProblem((30.0, 0.0), 60.0, 10_000_000.0)
for system in ("cartesian", "geodetic"):
    p = DirectProblem(prob.start, prob.alpha0, prob.s01, system)
    rep = convergence_study(WGS84, p, [250, 500, 1000, 2000, 1_000_000])
    print(f"{system}: endpoint error against n = {rep.n_list[-1]}")
    for n, err, order in zip(rep.n_list, rep.errors, rep.orders + (None,)):
        tail = "" if order is None else f"   order to next: {order:.3f}"
        print(f"  n={n:5d}  error={err:.3e} m{tail}")

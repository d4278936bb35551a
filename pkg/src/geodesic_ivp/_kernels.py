"""Compiled fixed-step RK4 loops for the two geodesic systems.

These are the production integration paths used by the solver. They perform
the same classical RK4 update as :func:`geodesic_ivp.integrator.integrate`
with ``compensated=True`` (same stage arithmetic, same operation order) and
fold the diagnostics of the per-step observer into the loop, so a million
steps cost well under a second. Without numba they still run, as plain
Python.
"""

import math

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda fn: fn

OK = 0
NONFINITE = 1
POLE = 2

HALF_PI = math.pi / 2


@njit(cache=True, nogil=True)
def _cart_rhs(y, omw, out):
    x, yy, z, xd, yd, zd = y[0], y[1], y[2], y[3], y[4], y[5]
    zs = z / omw
    k = (xd * xd + yd * yd + zd * zd / omw) / (x * x + yy * yy + zs * zs)
    out[0] = xd
    out[1] = yd
    out[2] = zd
    out[3] = -k * x
    out[4] = -k * yy
    out[5] = -k * zs


@njit(cache=True, nogil=True)
def _geo_rhs(y, e2, out):
    phi, dphi, dlam = y[0], y[1], y[3]
    if not abs(phi) < HALF_PI:
        return False
    s = math.sin(phi)
    s2p = math.sin(2 * phi)
    w = 1 - e2 * s * s
    g111 = 3 * e2 * s2p / (2 * w)
    g122 = w * s2p / (2 * (1 - e2))
    g212 = -(1 - e2) * math.tan(phi) / w
    out[0] = dphi
    out[1] = -g111 * dphi * dphi - g122 * dlam * dlam
    out[2] = dlam
    out[3] = -2 * g212 * dphi * dlam
    return True


@njit(cache=True, nogil=True)
def _accumulate(y, comp, sixth, k1, k2, k3, k4):
    # compensated (Kahan) update; keeps round-off from growing with the step count
    for j in range(y.shape[0]):
        inc = sixth * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]) - comp[j]
        tmp = y[j] + inc
        comp[j] = (tmp - y[j]) - inc
        y[j] = tmp


@njit(cache=True, nogil=True)
def _all_finite(v):
    for i in range(v.shape[0]):
        if not math.isfinite(v[i]):
            return False
    return True


@njit(cache=True, nogil=True)
def _cart_observe(y, a, omw, c0, diag):
    x, yy, z = y[0], y[1], y[2]
    dc = abs((x * y[4] - yy * y[3]) - c0)
    xa, ya, za = x / a, yy / a, z / a
    sres = abs(xa * xa + ya * ya + za * za / omw - 1)
    tres = abs((x * y[3] + yy * y[4] + z * y[5] / omw) / a)
    if dc > diag[0]:
        diag[0] = dc
    if sres > diag[1]:
        diag[1] = sres
    if tres > diag[2]:
        diag[2] = tres


@njit(cache=True, nogil=True)
def cartesian_run(y0, ds, n, a, e2, c0, stride, samples):
    """Integrate the Cartesian system ``n`` steps of size ``ds``.

    Returns ``(y, diag, status, step)`` with ``diag`` holding the running
    maxima of |delta C|, |S| and the tangency residual over the initial state
    and every step. When ``stride > 0`` the states at steps 0, stride, ...,
    and n are written to consecutive rows of ``samples``.
    """
    omw = 1 - e2
    d = y0.shape[0]
    y = y0.copy()
    k1 = np.empty(d)
    k2 = np.empty(d)
    k3 = np.empty(d)
    k4 = np.empty(d)
    t = np.empty(d)
    comp = np.zeros(d)
    diag = np.zeros(3)
    half = 0.5 * ds
    sixth = ds / 6.0
    _cart_observe(y, a, omw, c0, diag)
    row = 0
    if stride > 0:
        samples[row, :] = y
        row += 1
    for i in range(1, n + 1):
        _cart_rhs(y, omw, k1)
        for j in range(d):
            t[j] = y[j] + half * k1[j]
        _cart_rhs(t, omw, k2)
        for j in range(d):
            t[j] = y[j] + half * k2[j]
        _cart_rhs(t, omw, k3)
        for j in range(d):
            t[j] = y[j] + ds * k3[j]
        _cart_rhs(t, omw, k4)
        _accumulate(y, comp, sixth, k1, k2, k3, k4)
        if not _all_finite(y):
            return y, diag, NONFINITE, i
        _cart_observe(y, a, omw, c0, diag)
        if stride > 0 and (i % stride == 0 or i == n):
            samples[row, :] = y
            row += 1
    return y, diag, OK, n


@njit(cache=True, nogil=True)
def _geo_observe(y, a, e2, c0, diag):
    phi = y[0]
    s = math.sin(phi)
    c = math.cos(phi)
    w = 1 - e2 * s * s
    a2 = a * a
    omw = 1 - e2
    big_e = a2 * omw * omw / (w * w * w)
    big_g = a2 * c * c / w
    dc = abs(big_g * y[3] - c0)
    speed = abs(big_e * y[1] * y[1] + big_g * y[3] * y[3] - 1)
    if dc > diag[0]:
        diag[0] = dc
    if speed > diag[1]:
        diag[1] = speed
    if abs(phi) > diag[2]:
        diag[2] = abs(phi)


@njit(cache=True, nogil=True)
def geodetic_run(y0, ds, n, a, e2, c0, stride, samples):
    """Integrate the geodetic system; see :func:`cartesian_run`.

    ``diag`` holds the maxima of |delta C|, |unit-speed drift| and |phi|.
    Status ``POLE`` is returned if any stage reaches |phi| >= pi/2.
    """
    d = y0.shape[0]
    y = y0.copy()
    k1 = np.empty(d)
    k2 = np.empty(d)
    k3 = np.empty(d)
    k4 = np.empty(d)
    t = np.empty(d)
    comp = np.zeros(d)
    diag = np.zeros(3)
    half = 0.5 * ds
    sixth = ds / 6.0
    _geo_observe(y, a, e2, c0, diag)
    row = 0
    if stride > 0:
        samples[row, :] = y
        row += 1
    for i in range(1, n + 1):
        if not _geo_rhs(y, e2, k1):
            return y, diag, POLE, i
        for j in range(d):
            t[j] = y[j] + half * k1[j]
        if not _geo_rhs(t, e2, k2):
            return y, diag, POLE, i
        for j in range(d):
            t[j] = y[j] + half * k2[j]
        if not _geo_rhs(t, e2, k3):
            return y, diag, POLE, i
        for j in range(d):
            t[j] = y[j] + ds * k3[j]
        if not _geo_rhs(t, e2, k4):
            return y, diag, POLE, i
        _accumulate(y, comp, sixth, k1, k2, k3, k4)
        if not _all_finite(y):
            return y, diag, NONFINITE, i
        _geo_observe(y, a, e2, c0, diag)
        if stride > 0 and (i % stride == 0 or i == n):
            samples[row, :] = y
            row += 1
    return y, diag, OK, n

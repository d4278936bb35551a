"""Print high-precision reference values used by the unit tests.

Everything here is evaluated with mpmath at 32 significant digits, from
definitions rather than from the package's closed forms: radii of curvature
from the meridian ellipse, Christoffel symbols by differentiating the metric,
and the Cartesian acceleration from the generic implicit-surface geodesic
formula with a numerically differentiated Hessian.
"""

import mpmath as mp

mp.mp.dps = 32
A = mp.mpf(6378137)
F = 1 / mp.mpf("298.257223563")
E2 = F * (2 - F)


def meridian_point(phi):
    # meridian ellipse parametrised by geodetic latitude: normal angle = phi
    w = mp.sqrt(1 - E2 * mp.sin(phi) ** 2)
    return A * mp.cos(phi) / w, A * (1 - E2) * mp.sin(phi) / w


def radii(phi):
    rho = lambda t: meridian_point(t)[0]
    zeta = lambda t: meridian_point(t)[1]
    # arc-length speed of the meridian equals M; N = rho / cos(phi)
    m = mp.sqrt(mp.diff(rho, phi) ** 2 + mp.diff(zeta, phi) ** 2)
    return rho(phi) / mp.cos(phi), m


def metric(phi):
    n, m = radii(phi)
    return m * m, (n * mp.cos(phi)) ** 2


def christoffel(phi):
    e = lambda t: metric(t)[0]
    g = lambda t: metric(t)[1]
    E, G = metric(phi)
    return (mp.diff(e, phi) / (2 * E), -mp.diff(g, phi) / (2 * E), mp.diff(g, phi) / (2 * G))


def surface(x, y, z):
    return x * x + y * y + z * z / (1 - E2) - A * A


def cart_accel(pos, vel):
    grad = [mp.diff(lambda *p: surface(*p), pos, tuple(int(i == j) for j in range(3))) for i in range(3)]
    hess = [[mp.diff(lambda *p: surface(*p), pos, tuple(int(i == k) + int(j == k) for k in range(3)))
             for j in range(3)] for i in range(3)]
    q = sum(vel[i] * hess[i][j] * vel[j] for i in range(3) for j in range(3))
    g2 = sum(g * g for g in grad)
    return [-q / g2 * g for g in grad]


def main():
    for deg in ("0", "30", "45", "60", "89"):
        phi = mp.radians(mp.mpf(deg))
        n, m = radii(phi)
        print(f"radii {deg}: N={mp.nstr(n, 25)} M={mp.nstr(m, 25)}")
        print(f"  christoffel {deg}:", [mp.nstr(v, 25) for v in christoffel(phi)])
        lam = mp.radians(mp.mpf(40))
        print(f"  xyz({deg},40):", [mp.nstr(v, 25) for v in (n * mp.cos(phi) * mp.cos(lam), n * mp.cos(phi) * mp.sin(lam), n * (1 - E2) * mp.sin(phi))])
    # one geodetic rhs evaluation: phi=50 deg, alpha=35 deg, unit speed
    phi = mp.radians(50)
    al = mp.radians(35)
    n, m = radii(phi)
    dphi = mp.cos(al) / m
    dlam = mp.sin(al) / (n * mp.cos(phi))
    g111, g122, g212 = christoffel(phi)
    print("geodetic rhs:", [mp.nstr(v, 25) for v in (dphi, -g111 * dphi**2 - g122 * dlam**2, dlam, -2 * g212 * dphi * dlam)])
    # cartesian acceleration at (phi, lam) = (50, 40) heading 35 deg
    lam = mp.radians(40)
    pos = (n * mp.cos(phi) * mp.cos(lam), n * mp.cos(phi) * mp.sin(lam), n * (1 - E2) * mp.sin(phi))
    east = (-mp.sin(lam), mp.cos(lam), 0)
    north = (-mp.sin(phi) * mp.cos(lam), -mp.sin(phi) * mp.sin(lam), mp.cos(phi))
    vel = tuple(east[i] * mp.sin(al) + north[i] * mp.cos(al) for i in range(3))
    print("cartesian state:", [mp.nstr(v, 25) for v in pos + vel])
    print("cartesian accel:", [mp.nstr(v, 25) for v in cart_accel(pos, vel)])


if __name__ == "__main__":
    main()

"""Build a GeodTest-format sample with the nine-group layout of the published
test set, using GeographicLib's direct solution as the reference.

Usage: python scripts/make_geodtest_sample.py OUT.dat.gz [--group-size 1250] [--seed 20240101]

Group 1 holds 2 * group_size records, groups 2-9 group_size each. Inputs are
rounded the way the published file rounds them (angles to 1e-12 deg,
distances to 1e-6 m) before the reference end point is
computed, so each line is self-consistent.
"""

import argparse
import gzip
import math

import numpy as np
from geographiclib.geodesic import Geodesic

G = Geodesic.WGS84
S_MAX = 20003931.4586254
HALF = math.pi * G.a * (1 - G.f / 2)


def _round_inputs(lat1, azi1, s12):
    lat1 = min(max(round(lat1, 12), 0.0), 90.0)
    azi1 = min(max(round(azi1, 12), 0.0), 180.0)
    s12 = min(max(round(s12, 6), 0.0), S_MAX)
    return lat1, azi1, s12


def _random_points(rng, k):
    z = rng.uniform(-1, 1, k)
    return np.degrees(np.arcsin(z))


def _from_inverse(lat1, lat2, lon2):
    inv = G.Inverse(lat1, 0.0, lat2, lon2)
    return inv["azi1"], inv["s12"]


def group1(rng, k):
    out = []
    lat1 = np.abs(_random_points(rng, k))
    lat2 = _random_points(rng, k)
    lon2 = rng.uniform(0, 180, k)
    for a, b, c in zip(lat1, lat2, lon2):
        out.append((a, *_from_inverse(a, b, c)))
    return out


def group2(rng, k):
    out = []
    lat1 = rng.uniform(0, 90, k)
    for a in lat1:
        b = -a + rng.uniform(-0.5, 0.5)
        c = 180 - rng.uniform(0, 1.0)
        out.append((a, *_from_inverse(a, max(min(b, 90), -90), c)))
    return out


def group3(rng, k):
    lat1 = np.abs(_random_points(rng, k))
    azi1 = rng.uniform(0, 180, k)
    s = 10 ** rng.uniform(-3, 4, k)
    return list(zip(lat1, azi1, s))


def group4(rng, k):
    lat1 = 90 - 10 ** rng.uniform(-7, 0, k)
    lat1[: max(1, k // 50)] = 90.0
    azi1 = rng.uniform(0, 180, k)
    s = rng.uniform(0, S_MAX, k)
    return list(zip(lat1, azi1, s))


def group5(rng, k):
    out = []
    for _ in range(k):
        a = 90 - 10 ** rng.uniform(-7, 0)
        b = -90 + 10 ** rng.uniform(-7, 0)
        out.append((a, *_from_inverse(a, b, rng.uniform(0, 180))))
    return out


def group6(rng, k):
    lat1 = np.abs(_random_points(rng, k))
    d = 10 ** rng.uniform(-7, 0, k)
    azi1 = np.where(rng.uniform(size=k) < 0.5, d, 180 - d)
    s = rng.uniform(0, S_MAX, k)
    return list(zip(lat1, azi1, s))


def group7(rng, k):
    lat1 = 10 ** rng.uniform(-7, 0, k)
    azi1 = 90 + rng.uniform(-1, 1, k) * 10 ** rng.uniform(-7, 0, k)
    s = rng.uniform(0, S_MAX, k)
    return list(zip(lat1, azi1, s))


def group8(rng, k):
    out = []
    for _ in range(k):
        lat1 = rng.uniform(0, 90)
        half = G.ArcDirect(lat1, 0.0, 90.0, 180.0, Geodesic.DISTANCE)["s12"]
        out.append((lat1, 90.0, min(half, S_MAX)))
    return out


def group9(rng, k):
    out = []
    for _ in range(k):
        lat1 = abs(float(_random_points(rng, 1)[0]))
        azi1 = rng.uniform(0, 180)
        beta = math.atan2((1 - G.f) * math.tan(math.radians(lat1)), 1.0)
        sigma1 = math.degrees(math.atan2(math.tan(beta), math.cos(math.radians(azi1))))
        arc = (90 - sigma1) % 180 + rng.uniform(-1e-3, 1e-3)
        arc = min(max(arc, 0.0), 180.0)
        s = G.ArcDirect(lat1, 0.0, azi1, arc, Geodesic.DISTANCE)["s12"]
        out.append((lat1, azi1, s))
    return out


GROUPS = [group1, group2, group3, group4, group5, group6, group7, group8, group9]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("out")
    ap.add_argument("--group-size", type=int, default=1250)
    ap.add_argument("--seed", type=int, default=20240101)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    lines = []
    for gi, make in enumerate(GROUPS, start=1):
        k = args.group_size * (2 if gi == 1 else 1)
        for lat1, azi1, s12 in make(rng, k):
            lat1, azi1, s12 = _round_inputs(float(lat1), float(azi1), float(s12))
            r = G.Direct(lat1, 0.0, azi1, s12, Geodesic.ALL)
            lines.append(
                f"{lat1:.12f} 0 {azi1:.12f} {r['lat2']:.18f} {r['lon2']:.18f} "
                f"{r['azi2']:.18f} {s12:.6f} {r['a12']:.18f} {r['m12']:.9f} {r['S12']:.3f}\n"
            )
    opener = gzip.open if args.out.endswith(".gz") else open
    with opener(args.out, "wt") as fh:
        fh.writelines(lines)
    print(f"wrote {len(lines)} records to {args.out}")


if __name__ == "__main__":
    main()

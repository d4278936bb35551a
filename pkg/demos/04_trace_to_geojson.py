"""Write a trans-polar geodesic as GeoJSON for a map viewer.

Run: python demos/04_trace_to_geojson.py [out.geojson]

The same file comes out of the command line with
``geodesic-ivp trace --lat0 60 --lon0 -150 --azi0 10 --s 8e6 --every 20 --format geojson``.
"""

import sys

from geodesic_ivp.cli import main

out = sys.argv[1] if len(sys.argv) > 1 else "polar_route.geojson"
code = main(
    ["trace", "--lat0", "60", "--lon0", "-150", "--azi0", "10", "--s", "8e6",
     "--every", "20", "--format", "geojson", "-o", out]
)
print(f"wrote {out}" if code == 0 else f"failed with exit code {code}")

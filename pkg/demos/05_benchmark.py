"""Run the test-set benchmark on the bundled sample at two step counts.

Run: python demos/05_benchmark.py [GeodTest.dat[.gz]]

With the full published file, pass it as the argument (group size 50000);
the default is the 12 500-record sample under tests/data.
"""

import sys
from pathlib import Path

from geodesic_ivp.cli import main

if len(sys.argv) > 1:
    args = ["--testset", sys.argv[1], "--every", "40"]
else:
    sample = Path(__file__).resolve().parents[1] / "tests" / "data" / "GeodTest-sample.dat.gz"
    args = ["--testset", str(sample), "--group-size", "1250"]

sys.exit(main(["bench", *args, "--steps", "500", "--steps", "1000"]))

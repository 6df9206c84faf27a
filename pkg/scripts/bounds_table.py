"""Write the closed-form bound table over a grid of (n, d, c) as CSV.

    python3 scripts/bounds_table.py --n-max 8 --d-max 6 > bounds.csv
"""

import argparse
import sys

from regbound.bounds import bounds_grid
from regbound.cli.report import emit_report


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=8)
    ap.add_argument("--d-max", type=int, default=6)
    args = ap.parse_args(argv)
    sys.stdout.write(emit_report(bounds_grid(args.n_max, args.d_max), "csv"))
    return 0


if __name__ == "__main__":
    sys.exit(main())

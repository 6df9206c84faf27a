"""Run verification suites and write one JSON report per suite.

    python3 scripts/run_suites.py --out results/ [--seed 0] [suite ...]
"""

import argparse
import pathlib
import sys

from regbound.cli.report import emit_report
from regbound.cli.suites import SUITES, run_suite


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("suites", nargs="*", help="suite names (default: all)")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="results")
    args = ap.parse_args(argv)
    names = args.suites or sorted(SUITES)
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    bad = 0
    for name in names:
        res = run_suite(name, args.seed)
        (out / f"{name}.json").write_text(emit_report(res, "json"))
        sys.stdout.write(emit_report(res, "text"))
        bad += not res.ok
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())

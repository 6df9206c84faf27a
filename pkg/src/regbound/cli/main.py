"""Command-line entry point.

Exit codes: 0 success, 1 suite failures, 2 input error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import fields, replace

from regbound.algebra.orders import TermOrder
from regbound.bounds import bounds_grid, eval_static_bounds
from regbound.cli.parser import parse_ideal_source
from regbound.cli.report import emit_report
from regbound.cli.suites import SUITES, SuiteCaps, default_caps, run_suite
from regbound.errors import InputError, RegboundError, ResourceCapExceeded
from regbound.groebner.engine import buchberger
from regbound.groebner.ops import gin
from regbound.monomial.betti import betti_oracle_koszul
from regbound.monomial.classify import classify
from regbound.monomial.hilbert import hf_from_numerator, hilbert_dimension
from regbound.monomial.primes import associated_primes
from regbound.regularity.core import reg_bayer_stillman

EXIT_OK, EXIT_FAILURES, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def _load(path):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise InputError("io", str(exc)) from None
    return parse_ideal_source(text)


def _out(args, data, text):
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        print(text)


def cmd_classify(args):
    src = _load(args.file)
    I = src.to_monomial()
    flags = classify(I, src.field, args.d)
    data = {"ideal": str(I), **flags.as_dict()}
    _out(args, data, "\n".join(f"{k}: {v}" for k, v in data.items()))
    return EXIT_OK


def cmd_reg(args):
    I = _load(args.file).to_ideal()
    data = {}
    if args.method in ("bs", "both"):
        cert = reg_bayer_stillman(I, args.seed)
        data["bayer_stillman"] = cert.value
        data["chain"] = [
            {"n": s.n, "generating_degree": s.generating_degree, "value": s.value}
            for s in cert.chain]
    if args.method in ("gin-oracle", "both"):
        g = gin(I, seed=args.seed, trials=args.trials)
        data["gin"] = str(g.ideal)
        data["gin_oracle"] = betti_oracle_koszul(g.ideal, I.field).regularity
    if args.method == "both":
        data["agree"] = data["bayer_stillman"] == data["gin_oracle"]
    text = "\n".join(f"{k}: {v}" for k, v in data.items() if k != "chain")
    _out(args, data, text)
    return EXIT_OK if data.get("agree", True) else EXIT_FAILURES


def cmd_gin(args):
    I = _load(args.file).to_ideal()
    g = gin(I, order=args.order, seed=args.seed, trials=args.trials)
    data = {"gin": str(g.ideal), "generators": [list(u) for u in g.ideal.generators],
            "agreement": g.agreement, "samples": g.samples, "order": g.order.value}
    _out(args, data, f"{g.ideal}\nagreement {g.agreement} of {g.samples} samples")
    return EXIT_OK


def cmd_ass(args):
    I = _load(args.file).to_monomial()
    P = associated_primes(I)
    primes = [sorted(S) for S in P.primes]
    data = {"ideal": str(I), "primes": primes, "lexicographic": P.is_lexicographic()}
    text = "\n".join("(" + ", ".join(f"X{i}" for i in S) + ")" for S in primes)
    _out(args, data, text + f"\nlexicographic: {P.is_lexicographic()}")
    return EXIT_OK


def cmd_hilbert(args):
    src = _load(args.file)
    I = src.to_ideal()
    A = src.to_monomial() if src.is_monomial() else buchberger(I).initial_ideal()
    hd = hilbert_dimension(A)
    values = [hf_from_numerator(hd.numerator, A.n, k) for k in range(args.upto + 1)]
    data = {"numerator": list(hd.numerator), "dimension": hd.dimension,
            "height": hd.height, "hilbert_function": values}
    _out(args, data, "\n".join(f"{k}: {v}" for k, v in data.items()))
    return EXIT_OK


def cmd_bounds(args):
    if args.grid:
        reports = bounds_grid(args.n or 8, args.d or 6)
        fmt = "json" if args.json else args.format
        sys.stdout.write(emit_report(reports, fmt))
        return EXIT_OK
    if args.n is None or args.d is None:
        raise InputError("usage", "bounds needs --n and --d (or --grid)")
    try:
        rep = eval_static_bounds(args.n, args.d, args.c)
    except ValueError as exc:
        raise InputError("range", str(exc)) from None
    fmt = "json" if args.json else args.format
    sys.stdout.write(emit_report(rep, fmt))
    return EXIT_OK


def cmd_verify(args):
    caps = default_caps(args.suite)
    over = {f.name: getattr(args, f.name) for f in fields(SuiteCaps)
            if getattr(args, f.name, None) is not None}
    if "primes" in over:
        over["primes"] = tuple(over["primes"])
    caps = replace(caps, **over)
    res = run_suite(args.suite, args.seed, caps)
    sys.stdout.write(emit_report(res, "json" if args.json else "text"))
    return EXIT_OK if res.ok else EXIT_FAILURES


def build_parser():
    ap = argparse.ArgumentParser(prog="regbound",
                                 description="Regularity bounds toolkit for homogeneous ideals.")
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="stability flags of a monomial ideal")
    p.add_argument("file")
    p.add_argument("--d", type=int, default=1, help="degree for conditions (*) and (**)")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("reg", help="Castelnuovo-Mumford regularity")
    p.add_argument("file")
    p.add_argument("--method", choices=("bs", "gin-oracle", "both"), default="bs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=5)
    p.set_defaults(fn=cmd_reg)

    p = sub.add_parser("gin", help="generic initial ideal")
    p.add_argument("file")
    p.add_argument("--order", choices=[o.value for o in TermOrder], default="rlex")
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_gin)

    p = sub.add_parser("ass", help="associated primes of a monomial ideal")
    p.add_argument("file")
    p.set_defaults(fn=cmd_ass)

    p = sub.add_parser("hilbert", help="Hilbert numerator, dimension and height")
    p.add_argument("file")
    p.add_argument("--upto", type=int, default=10, help="print HF(0..upto)")
    p.set_defaults(fn=cmd_hilbert)

    p = sub.add_parser("bounds", help="evaluate the closed-form bounds")
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--grid", action="store_true", help="table over n <= N, d <= D")
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-max", dest="n_max", type=int)
    p.add_argument("--max-deg", dest="max_deg", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--pairs", type=int)
    p.add_argument("--gens-max", dest="gens_max", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--primes", type=int, nargs="+")
    p.add_argument("--prime", type=int)
    p.add_argument("--qq-samples", dest="qq_samples", type=int)
    p.add_argument("--koszul-cap", dest="koszul_cap", type=int)
    p.set_defaults(fn=cmd_verify)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceCapExceeded as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except RegboundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

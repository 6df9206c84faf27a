"""Report emission for suite results and bound tables.

JSON keys are fixed:
  SuiteResult: suite, seed, cases, failures[{case, ideal, seed, lhs, rhs, detail}],
               wall_time, caps, notes
  BoundReport: n, d, c, bound_A, bound_B, bound_main2, bound_final, bound_artinian,
               bound_p3, cc_sequence, main2_sequence (integers as decimal strings)
"""

from __future__ import annotations

import csv
import io
import json

from regbound.bounds import BoundReport, int_text
from regbound.cli.suites import SuiteResult

CSV_COLUMNS = ("n", "d", "c", "bound_A", "bound_B", "bound_main2", "bound_p3")
FORMATS = ("json", "csv", "text")


def _as_dict(obj):
    if isinstance(obj, (SuiteResult, BoundReport)):
        return obj.as_dict()
    raise TypeError(f"cannot report {type(obj).__name__}")


def bounds_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        w.writerow(["" if getattr(r, k) is None else int_text(getattr(r, k))
                    for k in CSV_COLUMNS])
    return buf.getvalue()


def suite_csv(result: SuiteResult) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    cols = ("case", "seed", "lhs", "rhs", "detail", "ideal")
    w.writerow(cols)
    for f in result.failures:
        row = f.as_dict()
        w.writerow([row[k] for k in cols])
    return buf.getvalue()


def _suite_text(result: SuiteResult) -> str:
    status = "PASS" if result.ok else "FAIL"
    lines = [f"{status} {result.suite} seed={result.seed} cases={result.cases} "
             f"failures={len(result.failures)} time={result.wall_time:.2f}s"]
    for note in result.notes:
        lines.append(f"  note: {note}")
    for f in result.failures:
        lines.append(f"  case {f.case} (seed {f.seed}): lhs={f.lhs} rhs={f.rhs} {f.detail}")
        lines.extend("    " + s for s in f.ideal.strip().splitlines())
    return "\n".join(lines) + "\n"


def _bound_text(r: BoundReport) -> str:
    d = r.as_dict()
    width = max(map(len, d))
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in d.items())


def emit_report(obj, format="json") -> str:
    """Serialize a SuiteResult, a BoundReport or a list of BoundReports."""
    if format not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}")
    many = isinstance(obj, (list, tuple))
    if format == "json":
        data = [_as_dict(x) for x in obj] if many else _as_dict(obj)
        return json.dumps(data, indent=2) + "\n"
    if format == "csv":
        if many or isinstance(obj, BoundReport):
            return bounds_csv(obj if many else [obj])
        return suite_csv(obj)
    if many:
        return "\n".join(_bound_text(r) for r in obj)
    if isinstance(obj, BoundReport):
        return _bound_text(obj)
    return _suite_text(obj)

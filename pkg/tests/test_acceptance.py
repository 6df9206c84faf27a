"""Acceptance checks, one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the summary lines.
"""

import time

from regbound.algebra.field import GF
from regbound.bounds import bound_p3, cc_recursion, eval_static_bounds, main2_recursion
from regbound.cli.suites import run_suite
from regbound.groebner.ideal import HomogeneousIdeal
from regbound.groebner.ops import gin
from regbound.monomial.ideal import MonomialIdeal

SEED = 0


def report(num, ok, elapsed, limit, detail=""):
    within = limit is None or elapsed < limit
    status = "PASS" if ok and within else "FAIL"
    lim = "" if limit is None else f" (limit {limit:g}s)"
    print(f"\n{status} criterion {num}: {elapsed:.2f}s{lim} {detail}".rstrip())
    return ok and within


def run_suites(names):
    t = time.perf_counter()
    results = [run_suite(name, SEED) for name in names]
    elapsed = time.perf_counter() - t
    detail = ", ".join(f"{r.suite} {r.cases} cases {len(r.failures)} failures"
                       for r in results)
    for r in results:
        for note in r.notes:
            detail += f"; note: {note}"
    return results, elapsed, detail


def test_criterion_1_frobenius_gin_example():
    ok, parts, worst = True, [], 0.0
    for p in (2, 3, 5):
        t = time.perf_counter()
        I = HomogeneousIdeal.from_monomial(MonomialIdeal([(2 * p, 0), (0, 2 * p)]), GF(p))
        got = gin(I, seed=SEED, trials=12).ideal
        want = MonomialIdeal([(2 * p, 0), (p, p), (0, 3 * p)])
        elapsed = time.perf_counter() - t
        worst = max(worst, elapsed)
        good = got == want and elapsed < 10
        ok &= good
        parts.append(f"p={p} {'ok' if good else 'MISMATCH'} gin={got} expected={want}")
    assert report(1, ok, worst, 10, "; ".join(parts)), parts


def test_criterion_2_frobenius_commutation():
    results, elapsed, detail = run_suites(["frobenius-gin"])
    r = results[0]
    ok = r.ok and r.caps.samples >= 25 and set(r.caps.primes) >= {2, 3} and r.caps.n_max == 3
    assert report(2, ok, elapsed, 300, detail), [f.as_dict() for f in r.failures[:5]]


def test_criterion_3_regularity_crosscheck():
    results, elapsed, detail = run_suites(["reg-crosscheck"])
    r = results[0]
    ok = r.ok and r.caps.samples >= 50
    assert report(3, ok, elapsed, 900, detail), [f.as_dict() for f in r.failures[:5]]


def test_criterion_4_eliahou_kervaire():
    results, elapsed, detail = run_suites(["ek-betti"])
    r = results[0]
    ok = r.ok and r.caps.samples >= 100 and r.caps.max_deg >= 5
    assert report(4, ok, elapsed, 600, detail), [f.as_dict() for f in r.failures[:5]]


def test_criterion_5_weakly_stable_corpus_suite():
    results, elapsed, detail = run_suites(["md-lemma", "gcount", "troubled", "cc"])
    ok = all(r.ok and r.cases > 0 for r in results)
    assert report(5, ok, elapsed, 600, detail), \
        [f.as_dict() for r in results for f in r.failures[:5]]


def test_criterion_6_weakly_stable_characterization():
    results, elapsed, detail = run_suites(["ass-primes", "weakly-closure"])
    ok = all(r.ok and r.cases > 0 for r in results) and results[1].caps.pairs >= 200
    assert report(6, ok, elapsed, None, detail), \
        [f.as_dict() for r in results for f in r.failures[:5]]


def test_criterion_7_regularity_estimates():
    results, elapsed, detail = run_suites(["snake", "sat-index", "ineq-A", "theorem-main"])
    ok = all(r.ok and r.cases > 0 for r in results)
    assert report(7, ok, elapsed, 1200, detail), \
        [f.as_dict() for r in results for f in r.failures[:5]]


def test_criterion_8_bound_table():
    t = time.perf_counter()
    rep = eval_static_bounds(4, 2, 2)
    got = (rep.bound_A, rep.bound_B, rep.bound_main2, rep.bound_p3, rep.bound_artinian)
    ok = got == (256, 4096, 49, 35, 5)
    for d in range(2, 7):
        ok &= main2_recursion(4, d, 2)[-1] == d ** 4 + 2 * d ** 3 + 2 * d - 1 == bound_p3(d)
        seq = cc_recursion(6, d)
        ok &= seq[1] == 2 * d
        ok &= all(seq[i] == seq[i - 1] ** 2 - (d - 2) * seq[i - 1] for i in range(2, 6))
    elapsed = time.perf_counter() - t
    assert report(8, ok, elapsed, 1, f"eval_static_bounds(4,2,2) = {got}"), got


def test_criterion_9_main_bounds_both_characteristics():
    results, elapsed, detail = run_suites(["main2"])
    r = results[0]
    ok = r.ok and r.caps.qq_samples >= 10
    assert report(9, ok, elapsed, None, detail), [f.as_dict() for f in r.failures[:5]]


def test_criterion_10_crystallisation_char0():
    results, elapsed, detail = run_suites(["cp-char0"])
    r = results[0]
    ok = r.ok and r.cases >= 20
    assert report(10, ok, elapsed, None, detail), [f.as_dict() for f in r.failures[:5]]

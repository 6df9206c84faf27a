"""Verification suites: each checks one structural identity or bound on a corpus.

Every case is reproducible from (suite, seed, caps); a failure stores the
ideal as parseable source text together with both sides of the violated
relation.
"""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field, replace
from functools import cached_property, lru_cache

from regbound.algebra.field import DEFAULT_PRIME, GF, QQ, FieldSpec
from regbound.algebra.linear import frobenius_image
from regbound.algebra.polynomial import Polynomial
from regbound.bounds import (bound_A, bound_final, bound_main2, bounds_grid, cc_recursion,
                             main2_recursion, bound_p3)
from regbound.cli.corpus import (enumerate_ideals, random_change, random_ideal,
                                 random_monomial_ideal, random_strongly_stable,
                                 random_form_of_degree)
from regbound.cli.parser import ideal_text
from regbound.errors import GenericityError
from regbound.groebner.engine import buchberger
from regbound.groebner.ideal import HomogeneousIdeal
from regbound.groebner.ops import (almost_regular_sequence, colon_linear, gin, height_of,
                                   ideal_contains, ideal_equal, initial_ideal, saturate,
                                   saturation)
from regbound.monomial.betti import DEFAULT_MULTIDEGREE_CAP, betti_oracle_koszul, betti_stable_EK
from regbound.monomial.classify import (condition_star, condition_star_star, is_p_borel,
                                        is_stable, is_strongly_stable, is_weakly_stable)
from regbound.monomial.hilbert import height
from regbound.monomial.ideal import MonomialIdeal, combine, restrict_to
from regbound.monomial.primes import associated_primes, weakly_stable_all_monomials
from regbound.regularity.core import reg_bayer_stillman, reg_plus_forms
from regbound.regularity.layers import (colon_layer_sides, colon_length, saturation_index,
                                        saturation_plus_form_length, theorem_main_terms)


@dataclass(frozen=True)
class SuiteCaps:
    n_max: int = 3            # ambient variables
    max_deg: int = 4          # generator degree cap
    samples: int = 30         # random cases
    pairs: int = 200          # random pairs (closure suite)
    gens_max: int = 3
    trials: int = 5           # gin consensus trials
    primes: tuple = (2, 3)
    prime: int = DEFAULT_PRIME
    qq_samples: int = 10
    koszul_cap: int = DEFAULT_MULTIDEGREE_CAP

    def as_dict(self):
        d = asdict(self)
        d["primes"] = list(self.primes)
        return d


@dataclass
class Failure:
    case: int
    ideal: str
    seed: int
    lhs: object
    rhs: object
    detail: str = ""

    def as_dict(self):
        return {"case": self.case, "ideal": self.ideal, "seed": self.seed,
                "lhs": str(self.lhs), "rhs": str(self.rhs), "detail": self.detail}


@dataclass
class SuiteResult:
    suite: str
    seed: int
    caps: SuiteCaps
    cases: int = 0
    failures: list = field(default_factory=list)
    wall_time: float = 0.0
    notes: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def check(self, ok, ideal, lhs, rhs, detail="", seed=None):
        """Record one case; ``ideal`` may be an ideal object or source text."""
        self.cases += 1
        if not ok:
            text = ideal if isinstance(ideal, str) else ideal_text(ideal)
            self.failures.append(Failure(self.cases - 1, text,
                                         self.seed if seed is None else seed,
                                         lhs, rhs, detail))
        return ok

    def as_dict(self):
        return {"suite": self.suite, "seed": self.seed, "cases": self.cases,
                "failures": [f.as_dict() for f in self.failures],
                "wall_time": round(self.wall_time, 3), "caps": self.caps.as_dict(),
                "notes": list(self.notes)}


# -- corpora ----------------------------------------------------------------------

@lru_cache(maxsize=None)
def full_corpus(n, max_deg):
    return tuple(enumerate_ideals(n, max_deg))


@lru_cache(maxsize=None)
def weakly_stable_corpus(n, max_deg):
    return tuple(I for I in full_corpus(n, max_deg) if is_weakly_stable(I))


def _ws_corpora(caps, n_min=1):
    for n in range(n_min, caps.n_max + 1):
        yield from weakly_stable_corpus(n, caps.max_deg)


def _case_seed(seed, idx):
    return seed * 1_000_003 + idx


def deficient_ideal(seed, idx, n_max=4, gens_max=3, max_deg=3, field=None,
                    below_n=True) -> HomogeneousIdeal:
    """Sample idx of the mixed random family (dense / common factor / moved monomial)."""
    field = field or GF(DEFAULT_PRIME)
    rng = random.Random(_case_seed(seed, idx))
    n = rng.randint(2, n_max)
    kind = idx % 3
    if kind == 0:
        if below_n and n_max >= 3:
            n = rng.randint(3, n_max)   # n = 2 would force a principal ideal
        top = min(gens_max, n - 1) if below_n else gens_max
        gens = rng.randint(1, top)
        degs = [rng.randint(1, max_deg) for _ in range(gens)]
        if max(degs) == 1 and max_deg > 1:
            degs[0] = rng.randint(2, max_deg)
        return random_ideal(n, gens, max_deg, field, rng.randrange(2**31), degs)
    if kind == 1:
        f = random_form_of_degree(n, 1, field, rng)
        gens = rng.randint(1, gens_max)
        inner = max(max_deg - 1, 1)
        J = random_ideal(n, gens, inner, field, rng.randrange(2**31))
        return HomogeneousIdeal([f * g for g in J.generators], n, field)
    while True:
        M = random_monomial_ideal(n, rng.randint(1, gens_max), max_deg, rng)
        if not below_n or height(M) < n:
            break
    return random_change(HomogeneousIdeal.from_monomial(M, field), rng)


class Sample:
    """Lazily computed data shared by the regularity suites."""

    def __init__(self, I: HomogeneousIdeal, seed: int):
        self.I = I
        self.seed = seed

    @cached_property
    def text(self):
        return ideal_text(self.I)

    @cached_property
    def reg(self):
        return reg_bayer_stillman(self.I, self.seed).value

    @cached_property
    def D(self):
        return buchberger(self.I).generating_degree()

    @cached_property
    def c(self):
        return height_of(self.I)

    @cached_property
    def forms(self):
        count = max(self.I.n - self.c, 0)
        return almost_regular_sequence(self.I, count, self.seed)


@lru_cache(maxsize=4096)
def deficient_sample(seed, idx, n_max, gens_max, max_deg, p, below_n) -> Sample:
    field = GF(p) if p else QQ
    I = deficient_ideal(seed, idx, n_max, gens_max, max_deg, field, below_n)
    return Sample(I, _case_seed(seed, idx))


def _deficient(seed, caps, below_n=True, count=None, p=None, n_max=None, max_deg=None):
    count = caps.samples if count is None else count
    p = caps.prime if p is None else p
    for idx in range(count):
        yield deficient_sample(seed, idx, n_max or caps.n_max, caps.gens_max,
                              max_deg or caps.max_deg, p, below_n)


# -- monomial suites --------------------------------------------------------------

def suite_md_lemma(res, caps):
    for I in _ws_corpora(caps):
        md = I.md()
        for i in range(1, I.n):
            lhs = restrict_to(I, i).md()[i - 1]
            res.check(lhs == md[i - 1], I, lhs, md[i - 1], f"section {i}")


def _section_product(I):
    prod = 1
    for i in range(1, I.n):
        prod *= restrict_to(I, i).generating_degree() + 1
    return prod


def suite_gcount(res, caps):
    for I in _ws_corpora(caps, 2):
        rhs = _section_product(I)
        res.check(len(I) <= rhs, I, len(I), rhs)


def suite_troubled(res, caps):
    for I in _ws_corpora(caps, 2):
        D = I.generating_degree()
        prod = _section_product(I)
        for d in range(1, D + 1):
            if condition_star(I, d):
                res.check(D <= d - 1 + prod, I, D, d - 1 + prod, f"d={d}")


def suite_cc(res, caps):
    for I in _ws_corpora(caps, 2):
        D = I.generating_degree()
        for d in range(1, D + 1):
            if condition_star_star(I, d):
                rhs = bound_A(I.n, d)
                res.check(D <= rhs, I, D, rhs, f"d={d}")


def suite_weakly_closure(res, caps):
    rng = random.Random(res.seed)
    pools = [weakly_stable_corpus(n, caps.max_deg) for n in range(2, caps.n_max + 1)]
    for _ in range(caps.pairs):
        pool = rng.choice(pools)
        I, J = rng.choice(pool), rng.choice(pool)
        for mode in ("sum", "product", "intersection"):
            K = combine(I, J, mode)
            res.check(is_weakly_stable(K), f"{ideal_text(I)}{ideal_text(J)}",
                      K, "weakly stable", mode)
    for I in _ws_corpora(caps, 2):
        for i in range(1, I.n):
            S = restrict_to(I, i)
            res.check(S.is_zero() or is_weakly_stable(S), I, S, "weakly stable",
                      f"section {i}")
    # strongly stable => stable => weakly stable; p-Borel => weakly stable
    for n in range(1, caps.n_max + 1):
        for I in full_corpus(n, min(caps.max_deg, 3)):
            ws, st, ss = is_weakly_stable(I), is_stable(I), is_strongly_stable(I)
            res.check(not ss or st, I, "strongly stable", "stable")
            res.check(not st or ws, I, "stable", "weakly stable")
            for p in caps.primes:
                res.check(not is_p_borel(I, p) or ws, I, f"{p}-Borel", "weakly stable")


def suite_ass_primes(res, caps):
    for n in range(1, caps.n_max + 1):
        for I in full_corpus(n, caps.max_deg):
            gen = is_weakly_stable(I)
            lex = associated_primes(I).is_lexicographic()
            res.check(gen == lex, I, gen, lex, "generator test vs lexicographic primes")
            full = weakly_stable_all_monomials(I)
            res.check(gen == full, I, gen, full, "generator test vs all monomials")


def _elementary_images(I: MonomialIdeal, field: FieldSpec, rng):
    """Generators of I after each X_i -> X_i + t X_j (j < i), three t values each."""
    n = I.n
    from regbound.algebra.linear import LinearChange, apply_linear_change
    for i in range(n):
        for j in range(i):
            for _ in range(3):
                t = 0
                while not t:
                    t = field.random_element(rng, 50)
                rows = [[int(a == b) for b in range(n)] for a in range(n)]
                rows[i][j] = t
                g = LinearChange(tuple(map(tuple, rows)), field)
                yield (i, j, t), [apply_linear_change(g, Polynomial.monomial(u, field))
                                  for u in I.generators]


def suite_borel_invariance(res, caps):
    rng = random.Random(res.seed)
    fields = [QQ] + [GF(p) for p in caps.primes]
    for n in range(2, caps.n_max + 1):
        for I in full_corpus(n, min(caps.max_deg, 3)):
            for fld in fields:
                G = buchberger(HomogeneousIdeal.from_monomial(I, fld))
                invariant = all(all(G.contains(f) for f in imgs)
                                for _, imgs in _elementary_images(I, fld, rng))
                pred = is_p_borel(I, fld.characteristic)
                res.check(invariant == pred, I, invariant, pred, f"over {fld}")


def suite_stable_betti(res, caps):
    for n in range(1, caps.n_max + 1):
        for I in full_corpus(n, caps.max_deg):
            if not is_stable(I):
                continue
            ek = betti_stable_EK(I)
            ko = betti_oracle_koszul(I, QQ, caps.koszul_cap)
            res.check(ek == ko, I, ek.entries, ko.entries, "EK vs Koszul")
            res.check(ek.regularity == I.generating_degree(), I, ek.regularity,
                      I.generating_degree(), "reg = D")


def suite_ek_betti(res, caps):
    for idx in range(caps.samples):
        s = _case_seed(res.seed, idx)
        rng = random.Random(s)
        n = rng.randint(1, caps.n_max)
        I = random_strongly_stable(n, caps.max_deg, s)
        ek = betti_stable_EK(I)
        ko = betti_oracle_koszul(I, GF(caps.prime), caps.koszul_cap)
        res.check(ek == ko, I, ek.entries, ko.entries, "EK vs Koszul", s)
        res.check(ek.regularity == I.generating_degree(), I, ek.regularity,
                  I.generating_degree(), "reg = D", s)


# -- generic initial ideals -------------------------------------------------------

def suite_frobenius_gin(res, caps):
    for p in caps.primes:
        F = GF(p)
        for idx in range(caps.samples):
            s = _case_seed(res.seed, idx)
            rng = random.Random(s)
            gens = rng.randint(1, 2)
            degs = [rng.randint(1, 2) for _ in range(gens)]
            degs[0] = 2                 # keep the family away from linear spaces
            I = random_ideal(caps.n_max, gens, 2, F, rng.randrange(2**31), degs)
            FI = frobenius_image(I, p)
            lhs_in = initial_ideal(FI)
            rhs_in = frobenius_image(initial_ideal(I), p)
            res.check(lhs_in == rhs_in, I, lhs_in, rhs_in, f"initial ideal, p={p}", s)
            try:
                g = gin(I, seed=s, trials=caps.trials).ideal
            except GenericityError as exc:
                g = exc
            try:
                gf = gin(FI, seed=s, trials=caps.trials).ideal
            except GenericityError as exc:
                gf = exc
            if isinstance(g, Exception) or isinstance(gf, Exception):
                both = isinstance(g, Exception) and isinstance(gf, Exception)
                res.check(False, I, gf, g, f"gin consensus failed (both: {both}), p={p}", s)
                continue
            rhs = frobenius_image(g, p)
            res.check(gf == rhs, I, gf, rhs, f"gin, p={p}", s)


def suite_cp_char0(res, caps, d=2, max_draws=400):
    found = 0
    for idx in range(max_draws):
        if found >= caps.samples:
            break
        s = _case_seed(res.seed, idx)
        rng = random.Random(s)
        n = rng.randint(2, caps.n_max)
        gens = rng.randint(1, caps.gens_max)
        degs = [rng.randint(1, d) for _ in range(gens)]
        degs[0] = d
        I = random_ideal(n, gens, d, QQ, rng.randrange(2**31), degs)
        G = gin(I, seed=s, trials=caps.trials).ideal
        if G.in_degree(d + 1):
            continue
        found += 1
        res.check(G.generating_degree() <= d, I, G.generating_degree(), d, str(G), s)
    if found < caps.samples:
        res.notes.append(f"only {found} qualifying samples in {max_draws} draws")


def suite_reg_crosscheck(res, caps):
    for smp in _deficient(res.seed, caps, below_n=False):
        gi = gin(smp.I, seed=smp.seed, trials=caps.trials).ideal
        oracle = betti_oracle_koszul(gi, smp.I.field, caps.koszul_cap).regularity
        res.check(smp.reg == oracle, smp.text, smp.reg, oracle, str(gi), smp.seed)
        res.check(smp.reg >= smp.D, smp.text, smp.reg, smp.D, "reg >= D", smp.seed)


# -- regularity suites ------------------------------------------------------------

def suite_snake(res, caps):
    for smp in _deficient(res.seed, caps):
        I, forms = smp.I, smp.forms
        J = I
        for depth, l in enumerate(forms[:2]):
            K = saturation_index(J, l).K
            for a in range(1, K + 2):
                sides = colon_layer_sides(J, l, a)
                res.check(sides.holds, smp.text, sides.lhs, sides.rhs_mod_l + sides.rhs_next,
                          f"layer a={a}, depth {depth}", smp.seed)
            lhs = colon_length(J, l)
            rhs = saturation_plus_form_length(J, l)
            res.check(lhs == rhs, smp.text, lhs, rhs, f"telescoped lengths, depth {depth}",
                      smp.seed)
            J = J + l.as_polynomial()


def suite_sat_index(res, caps):
    for smp in _deficient(res.seed, caps):
        I = smp.I
        l = smp.forms[0]
        prof = saturation_index(I, l)
        res.check(prof.K <= smp.reg, smp.text, prof.K, smp.reg, "K <= reg", smp.seed)
        res.check(all(x > 0 for x in prof.layer_lengths), smp.text, prof.layer_lengths, ">0",
                  "layer lengths", smp.seed)
        sat_l, K2 = saturate(I, l)
        sat_m = saturation(I)
        res.check(ideal_equal(sat_l, sat_m), smp.text, sat_l, sat_m, "I:l^inf = I^sat",
                  smp.seed)
        res.check(K2 == prof.K, smp.text, K2, prof.K, "index by iterated colon", smp.seed)
        J = I
        for k in range(1, prof.K + 1):
            J = colon_linear(J, l)
            res.check(ideal_contains(sat_m, J), smp.text, f"I:l^{k}", "I^sat",
                      "colon inside saturation", smp.seed)


def suite_ineq_A(res, caps):
    for smp in _deficient(res.seed, caps):
        l = smp.forms[0]
        rhs = max(smp.D, reg_plus_forms(smp.I, [l], smp.seed)) + colon_length(smp.I, l)
        res.check(smp.reg <= rhs, smp.text, smp.reg, rhs, "", smp.seed)


def suite_theorem_main(res, caps):
    for smp in _deficient(res.seed, caps):
        est = theorem_main_terms(smp.I, smp.forms, smp.seed)
        res.check(smp.reg <= est.rhs, smp.text, smp.reg, est.rhs, str(est), smp.seed)


def _bound_checks(res, smp):
    n, d, c = smp.I.n, smp.D, smp.c
    fin = bound_final(n, d)
    res.check(smp.reg <= fin, smp.text, smp.reg, fin, "final bound", smp.seed)
    if 1 <= c < n:
        b2 = bound_main2(n, d, c)
        res.check(smp.reg <= b2, smp.text, smp.reg, b2, f"height {c} bound", smp.seed)


def suite_main2(res, caps):
    for smp in _deficient(res.seed, caps):
        _bound_checks(res, smp)
    for smp in _deficient(res.seed, caps, below_n=False):
        _bound_checks(res, smp)
    for smp in _deficient(res.seed, caps, count=caps.qq_samples, p=0,
                         n_max=min(caps.n_max, 3), max_deg=2):
        _bound_checks(res, smp)


def suite_bounds_grid(res, caps):
    for rep in bounds_grid(max(caps.n_max, 2), max(caps.max_deg, 1)):
        n, d, c = rep.n, rep.d, rep.c
        last = main2_recursion(n, d, c)[-1]
        res.check(last <= rep.bound_main2, f"n={n} d={d} c={c}", last, rep.bound_main2,
                  "main2 recursion")
        if d >= 2:
            cc = cc_recursion(n, d)[-1]
            res.check(cc <= rep.bound_A, f"n={n} d={d}", cc, rep.bound_A, "cc recursion")
        if n >= 3:
            res.check(rep.bound_final <= rep.bound_A, f"n={n} d={d}", rep.bound_final,
                      rep.bound_A, "final vs A")
        if c + 1 < n:
            nxt = bound_main2(n, d, c + 1)
            res.check(nxt <= rep.bound_main2, f"n={n} d={d} c={c}", nxt, rep.bound_main2,
                      "non-increasing in c")
        if n == 4 and c == 2:
            res.check(last == bound_p3(d), f"d={d}", last, bound_p3(d), "quartic instance")


SUITES = {
    "md-lemma": (suite_md_lemma, SuiteCaps()),
    "gcount": (suite_gcount, SuiteCaps()),
    "troubled": (suite_troubled, SuiteCaps()),
    "cc": (suite_cc, SuiteCaps()),
    "weakly-closure": (suite_weakly_closure, SuiteCaps()),
    "ass-primes": (suite_ass_primes, SuiteCaps()),
    "frobenius-gin": (suite_frobenius_gin, SuiteCaps(n_max=3, samples=25, trials=6)),
    "cp-char0": (suite_cp_char0, SuiteCaps(samples=20, trials=3)),
    "snake": (suite_snake, SuiteCaps(n_max=4, max_deg=3)),
    "sat-index": (suite_sat_index, SuiteCaps(n_max=4, max_deg=3)),
    "ineq-A": (suite_ineq_A, SuiteCaps(n_max=4, max_deg=3)),
    "theorem-main": (suite_theorem_main, SuiteCaps(n_max=4, max_deg=3)),
    "main2": (suite_main2, SuiteCaps(n_max=4, max_deg=3)),
    "borel-invariance": (suite_borel_invariance, SuiteCaps(max_deg=3)),
    "reg-crosscheck": (suite_reg_crosscheck, SuiteCaps(n_max=4, max_deg=3, samples=50)),
    "bounds-grid": (suite_bounds_grid, SuiteCaps(n_max=8, max_deg=6)),
    "stable-betti": (suite_stable_betti, SuiteCaps()),
    "ek-betti": (suite_ek_betti, SuiteCaps(n_max=4, max_deg=5, samples=100)),
}


def default_caps(name) -> SuiteCaps:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return SUITES[name][1]


def run_suite(name, seed=0, caps: SuiteCaps | None = None, **overrides) -> SuiteResult:
    fn, base = SUITES[name] if name in SUITES else (None, None)
    if fn is None:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    caps = caps or base
    if overrides:
        caps = replace(caps, **overrides)
    res = SuiteResult(name, seed, caps)
    t0 = time.perf_counter()
    fn(res, caps)
    res.wall_time = time.perf_counter() - t0
    return res

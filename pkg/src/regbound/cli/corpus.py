"""Ideal corpora: exhaustive monomial antichains and seeded random ideals."""

from __future__ import annotations

import random
from functools import lru_cache

from regbound.algebra.field import FieldSpec, GF, DEFAULT_PRIME
from regbound.algebra.linear import LinearChange, apply_linear_change
from regbound.algebra.polynomial import Polynomial
from regbound.errors import ResourceCapExceeded
from regbound.groebner.ideal import HomogeneousIdeal
from regbound.monomial.classify import classify
from regbound.monomial.ideal import MonomialIdeal, divides, monomials_of_degree

MAX_CORPUS_N = 3
MAX_CORPUS_DEG = 4


@lru_cache(maxsize=None)
def _poset(n, max_deg):
    monos = [u for k in range(1, max_deg + 1) for u in monomials_of_degree(n, k)]
    comparable = []
    for a in monos:
        mask = 0
        for j, b in enumerate(monos):
            if divides(a, b) or divides(b, a):
                mask |= 1 << j
        comparable.append(mask)
    return monos, comparable


def _antichains(n, max_deg):
    monos, comparable = _poset(n, max_deg)
    m = len(monos)
    chosen = []

    def walk(start, blocked):
        for k in range(start, m):
            if blocked >> k & 1:
                continue
            chosen.append(k)
            yield tuple(chosen)
            yield from walk(k + 1, blocked | comparable[k])
            chosen.pop()

    for idx in walk(0, 0):
        yield [monos[k] for k in idx]


def enumerate_ideals(n, max_deg, flags=None, field=None, d=1):
    """All nonzero proper monomial ideals generated in degrees 1..max_deg.

    ``flags`` is an optional dict such as {"weakly_stable": True}; each listed
    ClassificationFlags attribute must match.
    """
    if not (1 <= n <= MAX_CORPUS_N and 1 <= max_deg <= MAX_CORPUS_DEG):
        raise ResourceCapExceeded(
            f"corpus capped at n <= {MAX_CORPUS_N}, max_deg <= {MAX_CORPUS_DEG}")
    field = field or FieldSpec(0)
    for gens in _antichains(n, max_deg):
        I = MonomialIdeal(gens, n)
        if flags:
            cf = classify(I, field, d)
            if any(getattr(cf, k) != v for k, v in flags.items()):
                continue
        yield I


def count_ideals(n, max_deg):
    return sum(1 for _ in _antichains(n, max_deg))


def random_form_of_degree(n, deg, field, rng, bound=10**6):
    terms = {u: field.random_element(rng, bound) for u in monomials_of_degree(n, deg)}
    f = Polynomial(terms, n, field)
    while f.is_zero():
        f = random_form_of_degree(n, deg, field, rng, bound)
    return f


def random_ideal(n, gens, max_deg, field: FieldSpec = GF(DEFAULT_PRIME), seed=0,
                 degrees=None) -> HomogeneousIdeal:
    """Dense random homogeneous generators; degrees uniform in 1..max_deg unless given."""
    rng = random.Random(seed)
    if degrees is None:
        degrees = [rng.randint(1, max_deg) for _ in range(gens)]
    if len(degrees) != gens:
        raise ValueError("degree list must have one entry per generator")
    return HomogeneousIdeal([random_form_of_degree(n, k, field, rng) for k in degrees],
                            n, field)


def borel_closure(monos, n):
    """Smallest strongly stable monomial set containing ``monos`` (same degrees)."""
    seen = set(map(tuple, monos))
    stack = list(seen)
    while stack:
        u = stack.pop()
        for i in range(n):
            if u[i]:
                for j in range(i):
                    v = list(u)
                    v[i] -= 1
                    v[j] += 1
                    v = tuple(v)
                    if v not in seen:
                        seen.add(v)
                        stack.append(v)
    return seen


def random_strongly_stable(n, max_deg, seed=0, count=None) -> MonomialIdeal:
    """Borel closure of a few random monomials of degree <= max_deg."""
    rng = random.Random(seed)
    count = count or rng.randint(1, 3)
    picks = []
    for _ in range(count):
        k = rng.randint(1, max_deg)
        picks.append(rng.choice(monomials_of_degree(n, k)))
    return MonomialIdeal(borel_closure(picks, n), n)


def random_monomial_ideal(n, gens, max_deg, rng) -> MonomialIdeal:
    picks = []
    for _ in range(gens):
        k = rng.randint(1, max_deg)
        picks.append(rng.choice(monomials_of_degree(n, k)))
    return MonomialIdeal(picks, n)


def random_change(I: HomogeneousIdeal, rng) -> HomogeneousIdeal:
    g = LinearChange.random(I.n, I.field, rng)
    return I.map(lambda f: apply_linear_change(g, f))

import random

import hypothesis.strategies as st
from hypothesis import HealthCheck, settings

from regbound.algebra.field import GF, QQ
from regbound.algebra.polynomial import Polynomial
from regbound.monomial.ideal import MonomialIdeal

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

FIELDS = [QQ, GF(2), GF(3), GF(32003)]


def exponents(n, max_deg):
    return st.lists(st.integers(0, max_deg), min_size=n, max_size=n).filter(
        lambda e: 0 < sum(e) <= max_deg).map(tuple)


@st.composite
def monomial_ideals(draw, n_min=1, n_max=3, max_deg=4, max_gens=5):
    n = draw(st.integers(n_min, n_max))
    gens = draw(st.lists(exponents(n, max_deg), min_size=1, max_size=max_gens))
    return MonomialIdeal(gens, n)


@st.composite
def polynomials(draw, n, field, max_deg=3, max_terms=4, homogeneous=False):
    deg = draw(st.integers(0, max_deg))
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        if homogeneous:
            e = draw(exponents(n, deg).filter(lambda e: sum(e) == deg)) if deg else (0,) * n
        else:
            e = tuple(draw(st.lists(st.integers(0, max_deg), min_size=n, max_size=n)))
        terms[e] = draw(st.integers(-20, 20))
    return Polynomial(terms, n, field)


def rng(seed=0):
    return random.Random(seed)

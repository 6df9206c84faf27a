import random
from itertools import combinations

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from regbound.algebra.field import GF, QQ
from regbound.algebra.linear import LinearForm, frobenius_image, matrix_rank
from regbound.algebra.orders import TermOrder
from regbound.algebra.polynomial import Polynomial
from regbound.cli.corpus import borel_closure, random_change, random_ideal
from regbound.errors import ResourceCapExceeded
from regbound.groebner.engine import buchberger, normal_form
from regbound.groebner.ideal import HomogeneousIdeal
from regbound.groebner.ops import (almost_regular_sequence, colon_ideal, gin, ideal_contains,
                                   ideal_equal, initial_ideal, intersect, is_almost_regular,
                                   saturate, saturation, MAXIMAL)
from regbound.monomial.classify import is_strongly_stable
from regbound.monomial.hilbert import hilbert_function
from regbound.monomial.ideal import MonomialIdeal, monomials_of_degree, restrict_to
from regbound.regularity.core import ideal_plus_forms

F = GF(32003)


def var(i, n=2, f=F):
    return Polynomial.variable(i, n, f)


def H(gens, n=None, f=None):
    return HomogeneousIdeal(gens, n, f)


def dense_hf(I: HomogeneousIdeal, k):
    """dim (R/I)_k from the rank of all degree-k multiples of the generators."""
    rows = []
    monos = monomials_of_degree(I.n, k)
    index = {u: i for i, u in enumerate(monos)}
    for g in I.generators:
        e = k - g.degree()
        if e < 0:
            continue
        for w in monomials_of_degree(I.n, e):
            h = g.mul_monomial(w)
            row = [I.field.zero()] * len(monos)
            for u, c in h.terms.items():
                row[index[u]] = c
            rows.append(row)
    rank = matrix_rank(rows, I.field) if rows else 0
    return len(monos) - rank


def s_poly(f, g, order):
    (u, a), (v, b) = f.leading_term(order), g.leading_term(order)
    lcm = tuple(max(x, y) for x, y in zip(u, v))
    fu = f.mul_monomial(tuple(l - x for l, x in zip(lcm, u)), f.field.inv(a))
    gv = g.mul_monomial(tuple(l - y for l, y in zip(lcm, v)), g.field.inv(b))
    return fu - gv


# -- Groebner bases --------------------------------------------------------------

def test_buchberger_examples():
    x, y = var(0), var(1)
    G = buchberger(H([x * x - y * y, x * y]))
    assert set(G.elements) == {x * x - y * y, x * y, y ** 3}
    assert initial_ideal(H([x * x - y * y, x * y])) == MonomialIdeal([(2, 0), (1, 1), (0, 3)])
    M = MonomialIdeal([(2, 0), (1, 1)])
    assert buchberger(HomogeneousIdeal.from_monomial(M, F)).initial_ideal() == M
    f = (x * x + 3 * x * y).scale(5)
    assert buchberger(H([f])).elements == (f.monic(),)


def test_normal_form_examples():
    x, y = var(0, 2, QQ), var(1, 2, QQ)
    G = buchberger(H([x * x - y * y, x * y]))
    assert normal_form(x * x + y * y, G) == y * y * 2
    assert normal_form(x * y * x, G).is_zero()
    G1 = buchberger(H([x]))
    assert normal_form(y ** 3, G1) == y ** 3


@st.composite
def random_ideals(draw, fields=(F, QQ, GF(3))):
    n = draw(st.integers(2, 3))
    gens = draw(st.integers(1, 3))
    degs = draw(st.lists(st.integers(1, 3), min_size=gens, max_size=gens))
    field = draw(st.sampled_from(fields))
    seed = draw(st.integers(0, 10**6))
    return random_ideal(n, gens, 3, field, seed, degs)


@settings(max_examples=30)
@given(random_ideals(), st.sampled_from(list(TermOrder)))
def test_basis_is_reduced_and_closed(I, order):
    G = buchberger(I, order)
    lms = G.leading_monomials
    for g, lm in zip(G.elements, lms):
        assert g.leading_term(order) == (lm, 1)
        for u in g.monomials():
            for other in lms:
                if other != lm:
                    assert not all(a >= b for a, b in zip(u, other))
    for f, g in combinations(G.elements, 2):
        assert G.normal_form(s_poly(f, g, order)).is_zero()
    assert G.contains_ideal(I)
    assert all(G.normal_form(g).is_zero() for g in I.generators)


@settings(max_examples=20)
@given(random_ideals(), st.sampled_from(list(TermOrder)), st.integers(0, 10**6))
def test_normal_form_is_a_remainder(I, order, seed):
    r = random.Random(seed)
    G = buchberger(I, order)
    f = Polynomial.zero(I.n, I.field)
    for g in I.generators:
        e = tuple(r.randint(0, 1) for _ in range(I.n))
        f = f + g.mul_monomial(e, I.field(r.randint(1, 50)))
    extra = Polynomial.monomial(tuple(r.randint(0, 2) for _ in range(I.n)), I.field)
    nf = G.normal_form(f + extra)
    assert G.normal_form(f).is_zero()
    assert G.normal_form(nf - extra).is_zero()
    for u in nf.monomials():
        assert not any(all(a >= b for a, b in zip(u, lm)) for lm in G.leading_monomials)


@settings(max_examples=25)
@given(random_ideals(), st.sampled_from(list(TermOrder)))
def test_hilbert_function_of_initial_ideal(I, order):
    A = initial_ideal(I, order)
    D = max(I.degrees())
    for k in range(D + 4):
        assert hilbert_function(A, k) == dense_hf(I, k)


def test_generating_degree_tracks_minimal_generators():
    x, y = var(0), var(1)
    I = H([x * x, x * x * y, y ** 3])             # x^2 y is redundant
    assert buchberger(I).generating_degree() == 3
    assert buchberger(H([x * x, x * y * y])).generating_degree() == 3
    assert buchberger(H([x * x, x ** 3 + x * x * y])).generating_degree() == 2


def test_step_cap(monkeypatch):
    x, y, z = var(0, 3), var(1, 3), var(2, 3)
    I = H([x * x - y * z, x * y - z * z, y ** 3 - x * z * z + x * y * z])
    monkeypatch.setenv("REGBOUND_MAX_GB_STEPS", "1")
    buchberger.cache_clear()
    with pytest.raises(ResourceCapExceeded):
        buchberger(I)
    monkeypatch.delenv("REGBOUND_MAX_GB_STEPS")
    buchberger.cache_clear()
    assert len(buchberger(I)) >= 3


# -- initial ideals and Frobenius ------------------------------------------------

@pytest.mark.parametrize("p", [2, 3, 5])
def test_initial_ideal_commutes_with_frobenius(p):
    for seed in range(6):
        I = random_ideal(3, 2, 2, GF(p), seed, [2, 2])
        assert initial_ideal(frobenius_image(I, p)) == frobenius_image(initial_ideal(I), p)


# -- colons, intersections, saturation --------------------------------------------

def test_colon_examples():
    x, y = var(0), var(1)
    I = H([x * x, x * y])
    for method in ("rotation", "elimination"):
        assert ideal_equal(colon_ideal(I, x, method), H([x, y]))
        assert ideal_equal(colon_ideal(I, Polynomial.constant(1, 2, F), method), I)
    f = x + y * 3
    J = H([f * x, f * y])
    assert ideal_equal(colon_ideal(J, f), H([x, y]))
    assert ideal_equal(intersect(H([x]), H([y])), H([x * y]))


@settings(max_examples=15)
@given(random_ideals(fields=(F, GF(7))), st.integers(0, 10**6))
def test_colon_methods_agree(I, seed):
    r = random.Random(seed)
    l = LinearForm.random(I.n, I.field, r, 100).as_polynomial()
    a = colon_ideal(I, l, "rotation")
    b = colon_ideal(I, l, "elimination")
    assert ideal_equal(a, b)
    for g in a.generators:                       # g * l lies in I
        assert ideal_contains(I, H([g * l], I.n, I.field))
    q = random_ideal(I.n, 1, 1, I.field, seed, [2]).generators[0]
    c = colon_ideal(I, q, "elimination")
    assert all(ideal_contains(I, H([g * q], I.n, I.field)) for g in c.generators)
    assert ideal_contains(c, I)


def test_saturate_examples():
    x, y = var(0), var(1)
    I = H([x * x, x * y])
    S, K = saturate(I, y)
    assert ideal_equal(S, H([x])) and K == 1
    S, K = saturate(H([x]), MAXIMAL)
    assert ideal_equal(S, H([x])) and K == 0
    S, K = saturate(H([x * x, x * y, y * y]), MAXIMAL)
    assert S.is_zero() is False and ideal_equal(S, H([Polynomial.constant(1, 2, F)])) and K == 2
    assert ideal_equal(saturation(I), H([x]))


def sat_by_powers(I, f):
    """I : f^inf as the stable value of I : f^k, each colon by elimination."""
    prev = I
    k = 1
    while True:
        cur = colon_ideal(I, f ** k, "elimination")
        if ideal_equal(cur, prev):
            return cur
        prev, k = cur, k + 1


@settings(max_examples=10)
@given(random_ideals(fields=(F,)), st.integers(0, 10**6))
def test_saturation_cross_checks(I, seed):
    S = saturation(I)
    S2, _ = saturate(I, MAXIMAL)
    assert ideal_equal(S, S2)
    n = I.n
    via_vars = None
    for i in range(n):
        Si = sat_by_powers(I, var(i, n))
        via_vars = Si if via_vars is None else intersect(via_vars, Si)
    assert ideal_equal(S, via_vars)


# -- almost-regular forms ----------------------------------------------------------

def test_almost_regular_examples():
    x, y = var(0), var(1)
    I = H([x * x, x * y])
    for method in ("saturation", "length"):
        assert is_almost_regular(I, LinearForm((0, 1), F), method)
        assert not is_almost_regular(I, LinearForm((1, 0), F), method)
    A = H([x * x, y * y])
    assert is_almost_regular(A, LinearForm((1, 0), F))
    forms = almost_regular_sequence(I, 1, seed=3)
    assert len(forms) == 1 and is_almost_regular(I, forms[0])


@settings(max_examples=20)
@given(random_ideals(fields=(F, GF(5))), st.integers(0, 10**6))
def test_almost_regular_methods_agree(I, seed):
    r = random.Random(seed)
    for _ in range(3):
        coeffs = [r.choice([0, 0, 1, r.randrange(I.field.p)]) for _ in range(I.n)]
        if not any(coeffs):
            continue
        l = LinearForm(tuple(coeffs), I.field)
        assert is_almost_regular(I, l, "saturation") == is_almost_regular(I, l, "length")


@settings(max_examples=10)
@given(random_ideals(fields=(F,)), st.integers(0, 1000))
def test_almost_regular_form_saturates_to_saturation(I, seed):
    forms = almost_regular_sequence(I, 1, seed)
    l = forms[0].as_polynomial()
    S, K = saturate(I, l)
    assert ideal_equal(S, saturation(I))
    J = I
    for _ in range(K):
        J = colon_ideal(J, l)
        assert ideal_contains(S, J)


# -- generic initial ideals ---------------------------------------------------------

def test_gin_frobenius_example_p3():
    F3 = GF(3)
    I = H([var(0, 2, F3) ** 6, var(1, 2, F3) ** 6])
    assert gin(I, seed=0, trials=6).ideal == MonomialIdeal([(6, 0), (3, 3), (0, 9)])


def test_gin_examples_char0():
    M = MonomialIdeal(borel_closure([(1, 1, 0), (0, 0, 2)], 3), 3)
    assert gin(HomogeneousIdeal.from_monomial(M, QQ), seed=1, trials=3).ideal == M
    f = random_ideal(3, 1, 3, QQ, 5, [3])
    assert gin(f, seed=2, trials=3).ideal == MonomialIdeal([(3, 0, 0)])


def test_gin_needs_two_trials_and_surfaces_failure():
    x = var(0, 2, GF(2))
    with pytest.raises(ValueError):
        gin(H([x]), trials=1)
    # x y (x + y) vanishes on all of GF(2)^2, so no change over GF(2) makes X1^3 leading
    y = var(1, 2, GF(2))
    res = gin(H([x * y * (x + y)]), seed=0, trials=4)
    assert res.agreement >= 2 and res.ideal != MonomialIdeal([(3, 0)])


@settings(max_examples=10)
@given(random_ideals(fields=(F,)), st.integers(0, 1000))
def test_gin_stable_under_further_change(I, seed):
    g1 = gin(I, seed=seed, trials=3).ideal
    J = random_change(I, random.Random(seed + 1))
    assert gin(J, seed=seed + 7, trials=3).ideal == g1
    assert all(hilbert_function(g1, k) == dense_hf(I, k) for k in range(5))


@settings(max_examples=8)
@given(st.integers(2, 3), st.integers(1, 2), st.integers(0, 1000))
def test_gin_over_rationals_is_strongly_stable(n, gens, seed):
    I = random_ideal(n, gens, 2, QQ, seed)
    assert is_strongly_stable(gin(I, seed=seed, trials=3).ideal)


@settings(max_examples=8)
@given(st.integers(2, 3), st.integers(1, 2), st.integers(0, 1000))
def test_gin_of_generic_section(n, gens, seed):
    I = random_ideal(n, gens, 2, QQ, seed)
    G = gin(I, seed=seed, trials=3).ideal
    r = random.Random(seed)
    for i in range(1, n):
        forms = [LinearForm.random(n, QQ, r, 100) for _ in range(n - i)]
        Ji = ideal_plus_forms(I, forms)
        rhs = gin(Ji, seed=seed, trials=3).ideal if not Ji.is_zero() else MonomialIdeal.zero(i)
        assert restrict_to(G, i) == rhs

from itertools import combinations, product
from math import comb

import hypothesis.strategies as st
import pytest
from hypothesis import given

from conftest import monomial_ideals
from regbound.algebra.field import GF
from regbound.cli.corpus import borel_closure
from regbound.errors import AmbientMismatch, NotStableError
from regbound.monomial.betti import betti_oracle_koszul, betti_stable_EK
from regbound.monomial.classify import (classify, condition_star, condition_star_star,
                                        is_p_borel, is_stable, is_strongly_stable,
                                        is_weakly_stable, p_adic_leq)
from regbound.monomial.hilbert import (hf_from_numerator, hilbert_dimension,
                                       hilbert_numerator, quotient_length)
from regbound.monomial.ideal import (MonomialIdeal, colon_by_monomial, combine, m_index,
                                     minimalize, monomials_of_degree, profile, restrict_to)
from regbound.monomial.primes import (associated_primes, membership_table,
                                      weakly_stable_all_monomials)

M = MonomialIdeal


def box(n, top):
    return product(range(top + 1), repeat=n)


def members(I, top):
    """Monomials of I with every exponent <= top, by the definition of membership."""
    return {u for u in box(I.n, top) if any(all(a >= b for a, b in zip(u, g))
                                            for g in I.generators)}


# -- ideals ---------------------------------------------------------------------

def test_minimalize_examples():
    assert minimalize([(2, 0), (2, 1), (0, 3)], 2) == M([(2, 0), (0, 3)])
    assert minimalize([(1,)], 1).generators == ((1,),)
    assert minimalize([(1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1)], 3) == \
        M([(1, 1, 0), (1, 0, 1), (0, 1, 1)])


def test_restrict_examples():
    I = M([(2, 0, 0), (1, 0, 1), (0, 1, 2)])
    assert restrict_to(I, 2) == M([(2, 0)])
    assert restrict_to(I, 3) == I
    assert restrict_to(M([(0, 0, 1)]), 2).is_zero()
    with pytest.raises(ValueError):
        restrict_to(I, 4)


def test_profile_examples():
    pr = profile(M([(2, 0), (0, 3)]))
    assert (pr.D, pr.md, pr.gen_count) == (3, (2, 3), 2)
    assert m_index((1, 0, 2)) == 3 and M([(1, 0, 2)]).md()[2] == 2
    pr = profile(M([(1, 1), (0, 2)]))
    assert (pr.D, pr.md, pr.gen_count) == (2, (1, 2), 2)
    with pytest.raises(ValueError):
        profile(M.zero(2))


def test_combine_and_colon_examples():
    assert combine(M([(1, 0)]), M([(0, 1)]), "intersection") == M([(1, 1)])
    assert combine(M([(1, 0)]), M([(0, 1)]), "product") == M([(1, 1)])
    assert combine(M([(2, 0)]), M([(1, 1)]), "sum") == M([(2, 0), (1, 1)])
    with pytest.raises(AmbientMismatch):
        combine(M([(1,)]), M([(1, 0)]), "sum")
    I = M([(2, 0), (1, 1)])
    assert colon_by_monomial(I, (1, 0)) == M([(1, 0), (0, 1)])
    assert colon_by_monomial(I, (0, 0)) == I
    assert colon_by_monomial(M([(2,)]), (3,)).is_unit()


@given(monomial_ideals(n_max=3, max_deg=3), monomial_ideals(n_max=3, max_deg=3))
def test_combine_matches_membership(I, J):
    if I.n != J.n:
        return
    top = 6
    a, b = members(I, top), members(J, top)
    assert members(combine(I, J, "sum"), top) == a | b
    assert members(combine(I, J, "intersection"), top) == a & b
    prod = combine(I, J, "product")
    for g in prod.generators:
        assert any(all(x >= y + z for x, y, z in zip(g, u, v))
                   for u in I.generators for v in J.generators)
    assert all(prod.contains(tuple(x + y for x, y in zip(u, v)))
               for u in I.generators for v in J.generators)


@given(monomial_ideals(n_max=3, max_deg=3), st.lists(st.integers(0, 2), min_size=3, max_size=3))
def test_colon_matches_membership(I, u):
    u = tuple(u[: I.n])
    C = colon_by_monomial(I, u)
    for v in box(I.n, 4):
        w = tuple(a + b for a, b in zip(u, v))
        assert C.contains(v) == I.contains(w)


@given(monomial_ideals(n_max=3, max_deg=4))
def test_restrict_matches_membership(I):
    for i in range(1, I.n + 1):
        S = restrict_to(I, i)
        for v in box(i, 4):
            assert S.contains(v) == I.contains(v + (0,) * (I.n - i))


@given(monomial_ideals(n_max=3, max_deg=4))
def test_membership_table_matches_generators(I):
    T = membership_table(I)
    for u in box(I.n, 5):
        c = tuple(min(a, t - 1) for a, t in zip(u, T.shape))
        assert bool(T[c]) == I.contains(u)


# -- classification -------------------------------------------------------------

def test_p_adic_examples():
    assert p_adic_leq(2, 5, 3)
    assert not p_adic_leq(1, 2, 2)
    assert all(p_adic_leq(k, k, p) for k in range(30) for p in (2, 3, 5))
    with pytest.raises(ValueError):
        p_adic_leq(1, 2, 4)


def test_classify_examples():
    I = M([(2, 0), (0, 2)])
    f = classify(I)
    assert f.weakly_stable and not f.stable
    assert classify(I, GF(2)).p_borel
    assert not classify(I, GF(3)).p_borel
    assert not classify(M([(0, 2)])).weakly_stable
    g = classify(M([(2, 0), (1, 1), (0, 3)]))
    assert g.stable and g.strongly_stable
    assert classify(M.unit(2)).weakly_stable and not classify(M.zero(2)).stable


def _exchange_ok(I, u, j, i, k):
    v = list(u)
    v[i] -= k
    v[j] += k
    return I.contains(tuple(v))


def brute_flags(I, p):
    """Definitions checked on every monomial of I of degree <= D + 2."""
    top = I.generating_degree() + 2
    mons = [u for k in range(top + 1) for u in monomials_of_degree(I.n, k) if I.contains(u)]
    stable = strongly = borel = True
    for u in mons:
        m = m_index(u) - 1
        for j in range(m):
            stable &= _exchange_ok(I, u, j, m, 1)
        for i in range(I.n):
            for j in range(i):
                if u[i]:
                    strongly &= _exchange_ok(I, u, j, i, 1)
                for k in range(1, u[i] + 1):
                    if p_adic_leq(k, u[i], p):
                        borel &= _exchange_ok(I, u, j, i, k)
    return stable, strongly, borel


@given(monomial_ideals(n_max=3, max_deg=4), st.sampled_from([2, 3]))
def test_predicates_match_definitions(I, p):
    st_, ss, pb = brute_flags(I, p)
    assert is_stable(I) == st_
    assert is_strongly_stable(I) == ss
    assert is_p_borel(I, p) == pb


def weakly_brute(I, top):
    """For every u in I up to degree top and j < m(u): X_j^k u / X_m^l in I for some k."""
    mons = [u for k in range(1, top + 1) for u in monomials_of_degree(I.n, k) if I.contains(u)]
    kmax = max(I.md()) + 1
    for u in mons:
        m = m_index(u) - 1
        for j in range(m):
            v = list(u)
            v[m] = 0
            if not any(I.contains(tuple(v[:j] + [v[j] + k] + v[j + 1:]))
                       for k in range(1, kmax + 1)):
                return False
    return True


@given(monomial_ideals(n_max=3, max_deg=4))
def test_weakly_stable_three_ways(I):
    gen = is_weakly_stable(I)
    assert gen == weakly_brute(I, I.generating_degree() + 3)
    assert gen == weakly_stable_all_monomials(I)
    assert gen == associated_primes(I).is_lexicographic()


@given(monomial_ideals(n_max=3, max_deg=4))
def test_stability_hierarchy(I):
    if is_strongly_stable(I):
        assert is_stable(I)
    if is_stable(I):
        assert is_weakly_stable(I)
    for p in (2, 3, 5):
        if is_p_borel(I, p):
            assert is_weakly_stable(I)
    assert is_p_borel(I, 0) == is_strongly_stable(I)


@given(monomial_ideals(n_min=2, n_max=3, max_deg=4))
def test_md_lemma_on_weakly_stable(I):
    if not is_weakly_stable(I):
        return
    md = I.md()
    for i in range(1, I.n):
        assert restrict_to(I, i).md()[i - 1] == md[i - 1]


def test_condition_star_examples():
    # generators in degrees 1 and 3: a gap at 2 followed by 3
    I = M([(1, 0), (0, 3)])
    assert condition_star(I, 1) is False
    assert condition_star(I, 3) is True
    assert not condition_star(M([(2, 0), (1, 1), (0, 2)]), 1)
    assert condition_star(M([(2, 0), (1, 1), (0, 2)]), 2)
    J = M([(2, 0, 0), (0, 1, 0)])
    assert not condition_star_star(J, 1) or condition_star(restrict_to(J, 1), 1)


def degrees_with_gap_then_generator(I, d):
    degs = set(I.degrees())
    return any(k not in degs and k + 1 in degs for k in range(d, I.generating_degree() + 1))


@given(monomial_ideals(n_max=3, max_deg=5), st.integers(1, 4))
def test_condition_star_definition(I, d):
    assert condition_star(I, d) == (not degrees_with_gap_then_generator(I, d))
    expect = all(condition_star(restrict_to(I, i), d) or restrict_to(I, i).is_zero()
                 for i in range(1, I.n + 1))
    assert condition_star_star(I, d) == expect


# -- associated primes ------------------------------------------------------------

def test_associated_primes_examples():
    P = associated_primes(M([(2, 0), (1, 1)]))
    assert set(P.primes) == {(1,), (1, 2)} and P.is_lexicographic()
    assert associated_primes(M([(1,)])).primes == ((1,),)
    Q = associated_primes(M([(0, 2)]))
    assert Q.primes == ((2,),) and not Q.is_lexicographic()
    with pytest.raises(ValueError):
        associated_primes(M.unit(2))


def primes_brute(I):
    found = set()
    for u in box(I.n, max(I.md())):
        if I.contains(u):
            continue
        C = colon_by_monomial(I, u)
        if all(sum(g) == 1 for g in C.generators):
            found.add(tuple(sorted(g.index(1) + 1 for g in C.generators)))
    return found


@given(monomial_ideals(n_max=3, max_deg=4))
def test_associated_primes_match_colon_oracle(I):
    P = associated_primes(I)
    assert set(P.primes) == primes_brute(I)
    for S, u in P.witnesses.items():
        C = colon_by_monomial(I, u)
        assert sorted(g.index(1) + 1 for g in C.generators) == list(S)


# -- Hilbert data -----------------------------------------------------------------

def test_hilbert_examples():
    assert hilbert_dimension(M([(1, 0)])) == ([1, -1], 1, 1)
    assert hilbert_dimension(M([(1, 0), (0, 1)]))[1:] == (0, 2)
    assert hilbert_dimension(M([(1, 1)])) == ([1, 0, -1], 1, 1)


def cover_number(I):
    for s in range(0, I.n + 1):
        for S in combinations(range(I.n), s):
            if all(any(g[i] for i in S) for g in I.generators):
                return s


@given(monomial_ideals(n_max=3, max_deg=4))
def test_hilbert_function_counts_standard_monomials(I):
    num = hilbert_numerator(I)
    for k in range(8):
        standard = sum(1 for u in monomials_of_degree(I.n, k) if not I.contains(u))
        assert hf_from_numerator(num, I.n, k) == standard
    h = hilbert_dimension(I)
    assert h.height == cover_number(I) and h.dimension == I.n - h.height


@given(monomial_ideals(n_max=3, max_deg=3))
def test_quotient_length_counts_monomials(I):
    powers = M([tuple(4 * int(a == i) for a in range(I.n)) for i in range(I.n)])
    J = combine(I, powers, "sum")                     # Artinian
    K = combine(J, M.maximal(I.n), "product")         # J m, still inside J
    length = quotient_length(K, J)
    assert length == sum(1 for u in box(I.n, 9) if J.contains(u) and not K.contains(u))
    assert length == len(J)                           # J / J m is spanned by G(J)


# -- Betti tables -----------------------------------------------------------------

def test_betti_examples():
    I = M([(2, 0), (1, 1), (0, 2)])
    ek = betti_stable_EK(I)
    assert ek.entries == {(0, 2): 3, (1, 3): 2} and ek.regularity == 2
    assert ek == betti_oracle_koszul(I)
    assert betti_stable_EK(M([(4, 0)])).entries == {(0, 4): 1}
    assert betti_stable_EK(M([(1, 0), (0, 1)])).entries == {(0, 1): 2, (1, 2): 1}
    assert betti_oracle_koszul(M([(1, 1)])).entries == {(0, 2): 1}
    assert betti_oracle_koszul(M([(2, 0), (1, 1)])).regularity == 2
    with pytest.raises(NotStableError):
        betti_stable_EK(M([(0, 1)]))


@given(st.integers(1, 4), st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3),
                                             st.integers(0, 2), st.integers(0, 2)),
                                   min_size=1, max_size=3))
def test_eliahou_kervaire_matches_koszul(n, picks):
    monos = [p[:n] for p in picks if 0 < sum(p[:n]) <= 5]
    if not monos:
        return
    I = M(borel_closure(monos, n), n)
    ek = betti_stable_EK(I)
    assert ek == betti_oracle_koszul(I, GF(32003))
    assert ek.regularity == I.generating_degree()


def test_koszul_complete_intersection():
    for a, b in [(2, 3), (1, 4), (3, 3)]:
        B = betti_oracle_koszul(M([(a, 0), (0, b)]))
        assert B.entries == {(0, a): 1, (0, b): 1, (1, a + b): 1} if a != b else \
            B.entries == {(0, a): 2, (1, 2 * a): 1}
        assert B.regularity == a + b - 1
    # projective dimension of R/I is n for the maximal ideal
    B = betti_oracle_koszul(M.maximal(3))
    assert [B.total(i) for i in range(3)] == [comb(3, 1), comb(3, 2), comb(3, 3)]

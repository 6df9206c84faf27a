import pytest

from regbound.algebra.field import GF
from regbound.cli.corpus import (borel_closure, count_ideals, enumerate_ideals, random_ideal,
                                 random_strongly_stable)
from regbound.errors import ResourceCapExceeded
from regbound.monomial.classify import is_strongly_stable
from regbound.monomial.ideal import MonomialIdeal, monomials_of_degree


def test_enumeration_examples():
    assert list(enumerate_ideals(1, 2)) == [MonomialIdeal([(1,)]), MonomialIdeal([(2,)])]
    assert set(enumerate_ideals(2, 1)) == {MonomialIdeal([(1, 0)]), MonomialIdeal([(0, 1)]),
                                           MonomialIdeal([(1, 0), (0, 1)])}
    assert count_ideals(2, 2) == 12          # regression constant
    assert count_ideals(2, 4) == 130
    assert count_ideals(3, 3) == 2496
    with pytest.raises(ResourceCapExceeded):
        list(enumerate_ideals(4, 2))
    with pytest.raises(ResourceCapExceeded):
        list(enumerate_ideals(2, 5))


def brute_antichains(n, max_deg):
    monos = [u for k in range(1, max_deg + 1) for u in monomials_of_degree(n, k)]
    count = 0
    for mask in range(1, 1 << len(monos)):
        chosen = [monos[i] for i in range(len(monos)) if mask >> i & 1]
        if all(not all(a <= b for a, b in zip(u, v)) for u in chosen for v in chosen if u != v):
            count += 1
    return count


@pytest.mark.parametrize("n, d", [(1, 3), (2, 2), (2, 3), (3, 2)])
def test_counts_match_brute_force(n, d):
    assert count_ideals(n, d) == brute_antichains(n, d)


def test_enumeration_distinct_and_filtered():
    ideals = list(enumerate_ideals(2, 3))
    assert len(ideals) == len(set(ideals)) == count_ideals(2, 3)
    ss = list(enumerate_ideals(2, 3, {"strongly_stable": True}))
    assert ss and all(is_strongly_stable(I) for I in ss)
    assert len(ss) == sum(map(is_strongly_stable, ideals))


def test_random_ideal_determinism():
    F = GF(32003)
    assert random_ideal(3, 2, 3, F, 9) == random_ideal(3, 2, 3, F, 9)
    h = random_ideal(3, 1, 1, F, 4)
    assert h.degrees() == [1]
    assert random_ideal(3, 3, 3, F, 1, [3, 1, 2]).degrees() == [3, 1, 2]
    with pytest.raises(ValueError):
        random_ideal(3, 2, 3, F, 1, [1])


def test_borel_closure_is_strongly_stable():
    for seed in range(30):
        I = random_strongly_stable(3, 4, seed)
        assert is_strongly_stable(I)
    assert MonomialIdeal(borel_closure([(0, 1)], 2), 2) == MonomialIdeal([(1, 0), (0, 1)])

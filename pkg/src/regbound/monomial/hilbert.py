"""Hilbert series numerators, Hilbert functions, height and colength.

Numerators are integer coefficient lists [a_0, a_1, ...] of N(t) with
HS_{R/I}(t) = N(t) / (1 - t)^n.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb
from typing import NamedTuple

from regbound.errors import InfiniteLengthError
from regbound.monomial.ideal import MonomialIdeal, minimal_set


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_add(a, b):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def poly_sub(a, b):
    return poly_add(a, [-x for x in b])


def poly_shift(a, k):
    return [0] * k + list(a) if a else []


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _one_minus_t_power(k):
    return [1] if k == 0 else poly_sub([1], poly_shift([1], k))


def _colon(gens, u):
    return minimal_set(tuple(max(a - b, 0) for a, b in zip(g, u)) for g in gens)


@lru_cache(maxsize=200_000)
def _numerator(gens):
    if not gens:
        return (1,)
    if any(not any(g) for g in gens):
        return ()
    pure = [g for g in gens if sum(1 for x in g if x) == 1]
    mixed = [g for g in gens if sum(1 for x in g if x) > 1]
    if not mixed:
        out = [1]
        for g in pure:
            out = poly_mul(out, _one_minus_t_power(sum(g)))
        return tuple(out)
    if len(mixed) == 1:
        m = mixed[0]
        base = _numerator(tuple(pure))
        rest = _numerator(_colon(tuple(pure), m))
        return tuple(poly_sub(list(base), poly_shift(list(rest), sum(m))))
    # pivot on the variable occurring in most mixed generators
    n = len(gens[0])
    counts = [sum(1 for g in mixed if g[i]) for i in range(n)]
    i = max(range(n), key=lambda k: (counts[k], -k))
    e = min(g[i] for g in mixed if g[i])
    p = tuple(e if k == i else 0 for k in range(n))
    with_p = minimal_set(gens + (p,))
    colon = _colon(gens, p)
    a = _numerator(with_p)
    b = _numerator(colon)
    return tuple(poly_add(list(a), poly_shift(list(b), e)))


def hilbert_numerator(I: MonomialIdeal):
    """Numerator of HS_{R/I} over (1-t)^n, as a list of ints."""
    return list(_numerator(I.generators))


def height(I: MonomialIdeal) -> int:
    """Minimum size of a variable set meeting every generator; n+1 for the unit ideal."""
    if I.is_unit():
        return I.n + 1
    if I.is_zero():
        return 0
    supports = [frozenset(i for i, x in enumerate(g) if x) for g in I.generators]
    for s in range(1, I.n + 1):
        for S in combinations(range(I.n), s):
            S = set(S)
            if all(sup & S for sup in supports):
                return s
    return I.n


class HilbertData(NamedTuple):
    numerator: list
    dimension: int
    height: int


def hilbert_dimension(I: MonomialIdeal) -> HilbertData:
    h = height(I)
    dim = -1 if I.is_unit() else I.n - h
    return HilbertData(hilbert_numerator(I), dim, h)


def hf_from_numerator(num, n, k):
    """Value at degree k of the Hilbert function with HS = num / (1-t)^n."""
    if k < 0:
        return 0
    if n == 0:
        return num[k] if k < len(num) else 0
    return sum(a * comb(k - j + n - 1, n - 1) for j, a in enumerate(num) if j <= k)


def hilbert_function(I: MonomialIdeal, k: int) -> int:
    return hf_from_numerator(hilbert_numerator(I), I.n, k)


def divide_one_minus_t(a, times):
    """Exact division of a by (1-t)^times; None if it does not divide."""
    a = list(a)
    for _ in range(times):
        if not a:
            return []
        if sum(a) != 0:
            return None
        # a(t) = (1-t) q(t): q_k = a_0 + ... + a_k
        q, acc = [], 0
        for x in a[:-1]:
            acc += x
            q.append(acc)
        a = _trim(q)
    return a


def length_from_numerators(num_small, num_big, n):
    """Length of J/I given N_I (small ideal) and N_J (big ideal).

    Raises InfiniteLengthError when the difference is not a polynomial series.
    """
    diff = poly_sub(list(num_small), list(num_big))
    q = divide_one_minus_t(diff, n)
    if q is None:
        raise InfiniteLengthError("quotient has infinite length")
    return sum(q)


def quotient_length(I: MonomialIdeal, J: MonomialIdeal) -> int:
    """Length of J/I for monomial ideals I <= J."""
    if not J.contains_ideal(I):
        raise ValueError("quotient length needs I contained in J")
    return length_from_numerators(hilbert_numerator(I), hilbert_numerator(J), I.n)


def socle_top(num, n):
    """Largest k with HF(k) != 0 for a finite-length quotient, -1 if R/I = 0."""
    q = divide_one_minus_t(num, n)
    if q is None:
        raise InfiniteLengthError("quotient is not Artinian")
    return len(q) - 1

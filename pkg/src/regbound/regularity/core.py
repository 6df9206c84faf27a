"""Regularity through the Bayer-Stillman criterion.

reg(I) is the least m >= max{D(I), reg(I + (l))} with (I : l)_m = I_m, for l
almost-regular on R/I. After rotating l to the last variable everything is
read off the rlex initial ideal: in(I : l) = in(I) : X_n, and the image of
I modulo l is generated by the basis with X_n set to zero.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from regbound.algebra.linear import LinearForm
from regbound.errors import GenericityError, InfiniteLengthError, NotArtinianError
from regbound.groebner.engine import buchberger
from regbound.groebner.ideal import HomogeneousIdeal
from regbound.groebner.ops import Rotation
from regbound.monomial.hilbert import (height, hf_from_numerator, hilbert_numerator,
                                       length_from_numerators, socle_top)
from regbound.monomial.ideal import MonomialIdeal, colon_by_monomial

FORM_RETRIES = 50


@dataclass(frozen=True)
class ChainStep:
    """One level of the recursion, in that level's coordinates."""

    n: int
    generating_degree: int
    form: tuple | None          # coefficients of l, None in the Artinian base case
    quotient_reg: int | None    # reg(I + (l)) computed in n - 1 variables
    colon_length: int | None    # length of (I : l) / I
    start: int
    value: int
    checked: tuple              # degrees tested before the criterion held


@dataclass(frozen=True)
class RegularityCertificate:
    value: int
    chain: tuple

    def __int__(self):
        return self.value


def last_variable(n):
    return tuple(int(i == n - 1) for i in range(n))


def restrict_last(G) -> HomogeneousIdeal:
    """Image of the ideal of an rlex basis G in K[X_1..X_{n-1}]."""
    n = G.n
    gens = []
    for g in G.elements:
        h = g.substitute_zero([n - 1])
        if not h.is_zero():
            gens.append(h.truncate_variables(n - 1))
    return HomogeneousIdeal(gens, n - 1, G.field)


def _artinian_value(A: MonomialIdeal, D: int):
    n = A.n
    value = socle_top(hilbert_numerator(A), n) + 1
    if value > n * (D - 1) + 1:
        raise AssertionError(f"Artinian regularity {value} above n(d-1)+1 = {n * (D - 1) + 1}")
    return value


def artinian_regularity(I: HomogeneousIdeal) -> int:
    """1 + the top degree with (R/I)_k != 0, for dim R/I = 0."""
    G = buchberger(I)
    A = G.initial_ideal()
    if A.is_unit():
        raise ValueError("regularity of the unit ideal")
    if height(A) != I.n:
        raise NotArtinianError("R/I has positive dimension")
    return _artinian_value(A, G.generating_degree())


def pick_almost_regular(I: HomogeneousIdeal, rng, retries=FORM_RETRIES):
    """Random l with (I : l)/I of finite length; returns (l, rotation, rlex basis, length)."""
    n = I.n
    xn = last_variable(n)
    for _ in range(retries):
        l = LinearForm.random(n, I.field, rng)
        rot = Rotation.for_forms([l], n, I.field)
        G = buchberger(rot.ideal_forward(I))
        A = G.initial_ideal()
        try:
            lam = length_from_numerators(hilbert_numerator(A),
                                         hilbert_numerator(colon_by_monomial(A, xn)), n)
        except InfiniteLengthError:
            continue
        return l, rot, G, lam
    raise GenericityError(f"no almost-regular form in {retries} tries over {I.field}")


def _bs(I: HomogeneousIdeal, rng, chain, retries):
    n = I.n
    G0 = buchberger(I)
    A0 = G0.initial_ideal()
    if A0.is_unit():
        raise ValueError("regularity of the unit ideal")
    D = G0.generating_degree()
    if height(A0) == n:
        v = _artinian_value(A0, D)
        chain.append(ChainStep(n, D, None, None, None, D, v, ()))
        return v
    l, rot, G, lam = pick_almost_regular(I, rng, retries)
    quotient = restrict_last(G)
    r = 1 if quotient.is_zero() else _bs(quotient, rng, chain, retries)
    A = G.initial_ideal()
    num_a = hilbert_numerator(A)
    num_b = hilbert_numerator(colon_by_monomial(A, last_variable(n)))
    start = max(D, r)
    checked = []
    for m in range(start, start + lam + 2):
        checked.append(m)
        if hf_from_numerator(num_a, n, m) == hf_from_numerator(num_b, n, m):
            chain.append(ChainStep(n, D, l.coefficients, r, lam, start, m, tuple(checked)))
            return m
    raise RuntimeError(f"Bayer-Stillman search passed its cap {start + lam + 1}: "
                       "the chosen form is not almost-regular")


def reg_bayer_stillman(I: HomogeneousIdeal, seed=0, retries=FORM_RETRIES) -> RegularityCertificate:
    if I.is_zero():
        raise ValueError("regularity of the zero ideal")
    chain = []
    value = _bs(I, random.Random(seed), chain, retries)
    return RegularityCertificate(value, tuple(chain))


def ideal_plus_forms(I: HomogeneousIdeal, forms) -> HomogeneousIdeal:
    """Image of I + (forms) in K[Y_1..Y_{n-k}], forms sent to Y_n, Y_{n-1}, ..."""
    if not forms:
        return I
    rot = Rotation.for_forms(forms, I.n, I.field)
    J = rot.ideal_forward(I)
    for _ in forms:
        if J.is_zero():
            J = HomogeneousIdeal.zero(J.n - 1, J.field)
            continue
        J = restrict_last(buchberger(J))
    return J


def reg_plus_forms(I: HomogeneousIdeal, forms, seed=0) -> int:
    """reg(I + (forms)) as an ideal of R (a zero image gives 1)."""
    J = ideal_plus_forms(I, forms)
    if J.is_zero():
        return 1
    return reg_bayer_stillman(J, seed).value


def reg(I: HomogeneousIdeal, seed=0) -> int:
    return reg_bayer_stillman(I, seed).value

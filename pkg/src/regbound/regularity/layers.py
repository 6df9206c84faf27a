"""Saturation indices, colon-layer lengths and the main regularity estimate.

All lengths come from rlex initial ideals after rotating the form l to the
last variable, where in(I : l^a) = in(I) : X_n^a and
in(I : l^a + (l)) = in(I) : X_n^a + (X_n).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from regbound.algebra.linear import LinearForm, matrix_rank
from regbound.errors import InfiniteLengthError
from regbound.groebner.engine import buchberger
from regbound.groebner.ideal import HomogeneousIdeal
from regbound.groebner.ops import (Rotation, height_of, is_almost_regular, length_between,
                                   saturation)
from regbound.monomial.hilbert import height, quotient_length
from regbound.monomial.ideal import MonomialIdeal, colon_by_monomial, combine
from regbound.regularity.core import last_variable, reg_bayer_stillman, reg_plus_forms


@dataclass(frozen=True)
class SaturationProfile:
    K: int
    layer_lengths: tuple


def rotated_initial(I: HomogeneousIdeal, l: LinearForm) -> MonomialIdeal:
    """rlex initial ideal of I in coordinates where l is the last variable."""
    rot = Rotation.for_forms([l], I.n, I.field)
    return buchberger(rot.ideal_forward(I)).initial_ideal()


def _colon_power(A: MonomialIdeal, a: int) -> MonomialIdeal:
    xn = last_variable(A.n)
    return colon_by_monomial(A, tuple(a * x for x in xn))


def _plus_last(A: MonomialIdeal) -> MonomialIdeal:
    return combine(A, MonomialIdeal([last_variable(A.n)], A.n), "sum")


def saturation_index(I: HomogeneousIdeal, l: LinearForm) -> SaturationProfile:
    """K = least k with I : l^k = I : l^(k+1), and the layer lengths up to K."""
    A = rotated_initial(I, l)
    try:
        quotient_length(A, _colon_power(A, 1))
    except InfiniteLengthError:
        raise InfiniteLengthError("form is not almost-regular for R/I") from None
    layers = []
    prev = A
    while True:
        nxt = colon_by_monomial(prev, last_variable(A.n))
        if nxt == prev:
            break
        layers.append(quotient_length(prev, nxt))
        prev = nxt
    return SaturationProfile(len(layers), tuple(layers))


@dataclass(frozen=True)
class LayerIdentity:
    lhs: int
    rhs_mod_l: int
    rhs_next: int

    @property
    def holds(self):
        return self.lhs == self.rhs_mod_l + self.rhs_next


def colon_layer_sides(I: HomogeneousIdeal, l: LinearForm, a: int) -> LayerIdentity:
    """Both sides of the length identity for the layer I : l^a over I : l^(a-1)."""
    if a < 1:
        raise ValueError("layer index a must be >= 1")
    A = rotated_initial(I, l)
    prev, cur, nxt = (_colon_power(A, k) for k in (a - 1, a, a + 1))
    return LayerIdentity(quotient_length(prev, cur),
                         quotient_length(_plus_last(prev), _plus_last(cur)),
                         quotient_length(cur, nxt))


def colon_layer_identity_check(I: HomogeneousIdeal, l: LinearForm, a: int) -> bool:
    return colon_layer_sides(I, l, a).holds


def saturation_plus_form_length(I: HomogeneousIdeal, l: LinearForm) -> int:
    """Length of (I^sat + (l)) / (I + (l)), with I^sat from the variable colons."""
    S = saturation(I)
    Sl = S + l.as_polynomial()
    Il = I + l.as_polynomial()
    return length_between(Il, Sl)


def colon_length(I: HomogeneousIdeal, l: LinearForm) -> int:
    A = rotated_initial(I, l)
    return quotient_length(A, _colon_power(A, 1))


@dataclass(frozen=True)
class MainEstimate:
    """Terms of the main estimate for one almost-regular sequence."""

    d: int
    c: int
    first_quotient_reg: int
    product_regs: tuple
    rhs: int


def theorem_main_terms(I: HomogeneousIdeal, forms, seed=0, check=True) -> MainEstimate:
    """max{d, reg(I + (l_n))} + d^c * prod_{i=c+2}^n reg(I + (l_n..l_i)).

    ``forms`` is [l_n, l_{n-1}, ..., l_{c+1}]; extra forms are ignored.
    """
    n = I.n
    c = height_of(I)
    if c >= n:
        raise ValueError(f"main estimate needs height < n (height {c}, n {n})")
    forms = list(forms)
    if len(forms) < n - c:
        raise ValueError(f"need {n - c} forms, got {len(forms)}")
    forms = forms[: n - c]
    if matrix_rank([f.coefficients for f in forms], I.field) < len(forms):
        raise ValueError("forms are linearly dependent")
    if check:
        J = I
        for k, l in enumerate(forms):
            if not is_almost_regular(J, l, "length"):
                raise ValueError(f"form {k} of the sequence is not almost-regular")
            J = J + l.as_polynomial()
    d = buchberger(I).generating_degree()
    first = reg_plus_forms(I, forms[:1], seed)
    prods = tuple(reg_plus_forms(I, forms[:k], seed) for k in range(1, n - c))
    prod = 1
    for r in prods:
        prod *= r
    return MainEstimate(d, c, first, prods, max(d, first) + d ** c * prod)


def theorem_main_rhs(I: HomogeneousIdeal, forms, seed=0) -> int:
    return theorem_main_terms(I, forms, seed).rhs


def inequality_A_sides(I: HomogeneousIdeal, l: LinearForm, seed=0):
    """(reg(I), max{d, reg(I + (l))} + length((I : l)/I))."""
    value = reg_bayer_stillman(I, seed).value
    d = buchberger(I).generating_degree()
    rhs = max(d, reg_plus_forms(I, [l], seed)) + colon_length(I, l)
    return value, rhs


def height1_reduce(I: MonomialIdeal):
    """I = f * J with f the gcd of the generators; requires height 1."""
    if height(I) != 1:
        raise ValueError(f"height1_reduce needs height 1, got {height(I)}")
    f = tuple(reduce(min, col) for col in zip(*I.generators))
    J = MonomialIdeal([tuple(a - b for a, b in zip(g, f)) for g in I.generators], I.n)
    return f, J


def gcd_degree(I: MonomialIdeal) -> int:
    return sum(height1_reduce(I)[0])


"""Ideal operations on top of the Buchberger engine.

Most constructions exploit two facts about rlex on a homogeneous ideal I
with reduced basis G: X_n divides lm(g) iff X_n divides g, so
in(I : X_n^k) = in(I) : X_n^k and {g / X_n^ord(g)} generates I : X_n^inf;
and {g(X_1..X_{n-1}, 0)} is a Groebner basis of the image of I modulo X_n.
A variable is brought to the last slot by a permutation, a linear form by
an exact coordinate rotation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from regbound.algebra.field import FieldSpec
from regbound.algebra.linear import (LinearChange, LinearForm, apply_linear_change,
                                     completing_change, matrix_rank)
from regbound.algebra.orders import TermOrder, codec as get_codec
from regbound.algebra.polynomial import Polynomial
from regbound.errors import AmbientMismatch, GenericityError, ResourceCapExceeded
from regbound.groebner.engine import buchberger, encode_poly, groebner_core, _monic
from regbound.groebner.ideal import HomogeneousIdeal
from regbound.monomial.hilbert import hilbert_numerator, length_from_numerators, height
from regbound.monomial.ideal import MonomialIdeal

MAXIMAL = "maximal"
SATURATION_CAP = 1000


def _same_ring(I, J):
    if I.n != J.n or I.field != J.field:
        raise AmbientMismatch("ideals live in different rings")


def reduced(I: HomogeneousIdeal) -> HomogeneousIdeal:
    """The same ideal, generated by its reduced rlex basis."""
    return HomogeneousIdeal(buchberger(I).elements, I.n, I.field)


def initial_ideal(I: HomogeneousIdeal, order=TermOrder.RLEX) -> MonomialIdeal:
    return buchberger(I, TermOrder(order)).initial_ideal()


def ideal_equal(I: HomogeneousIdeal, J: HomogeneousIdeal) -> bool:
    _same_ring(I, J)
    return set(buchberger(I).elements) == set(buchberger(J).elements)


def ideal_contains(I: HomogeneousIdeal, J: HomogeneousIdeal) -> bool:
    """Whether J is contained in I."""
    _same_ring(I, J)
    return buchberger(I).contains_ideal(J)


def is_unit(I: HomogeneousIdeal) -> bool:
    return initial_ideal(I).is_unit()


def hilbert_numerator_of(I: HomogeneousIdeal):
    return hilbert_numerator(initial_ideal(I))


def height_of(I: HomogeneousIdeal) -> int:
    return height(initial_ideal(I))


def dimension(I: HomogeneousIdeal) -> int:
    """Krull dimension of R/I (-1 for the unit ideal)."""
    h = height_of(I)
    return -1 if h > I.n else I.n - h


def length_between(I: HomogeneousIdeal, J: HomogeneousIdeal) -> int:
    """Length of J/I for I contained in J (InfiniteLengthError otherwise finite)."""
    return length_from_numerators(hilbert_numerator_of(I), hilbert_numerator_of(J), I.n)


# -- moving a variable or a linear form to the last slot --------------------------

def _to_last_perm(i, n):
    perm = []
    for j in range(n):
        perm.append(n - 1 if j == i else (j if j < i else j - 1))
    inv = [0] * n
    for j, t in enumerate(perm):
        inv[t] = j
    return perm, inv


def _strip_last(g: Polynomial, full: bool):
    """Divide g by X_n once (if it divides) or by its full X_n-power."""
    k = min(e[-1] for e in g.terms)
    if not full:
        k = min(k, 1)
    if not k:
        return g
    return Polynomial({e[:-1] + (e[-1] - k,): c for e, c in g.terms.items()}, g.n,
                      g.field, _canonical=True)


def colon_last_variable(I: HomogeneousIdeal, power=1) -> HomogeneousIdeal:
    """I : X_n^power (power=None for I : X_n^inf), via the rlex basis."""
    G = buchberger(I)
    gens = list(G.elements)
    if power is None:
        gens = [_strip_last(g, True) for g in gens]
    else:
        for _ in range(power):
            gens = [_strip_last(g, False) for g in gens]
            gens = list(buchberger(HomogeneousIdeal(gens, I.n, I.field)).elements)
    return reduced(HomogeneousIdeal(gens, I.n, I.field))


def colon_variable(I: HomogeneousIdeal, i: int, power=1) -> HomogeneousIdeal:
    """I : X_{i+1}^power for a 0-based variable index i (power=None: infinite)."""
    perm, inv = _to_last_perm(i, I.n)
    moved = I.map(lambda g: g.permute(perm))
    return colon_last_variable(moved, power).map(lambda g: g.permute(inv))


@dataclass(frozen=True)
class Rotation:
    """Coordinates Y with forms[0] = Y_n, forms[1] = Y_{n-1}, ...

    ``forward`` rewrites a polynomial of X in terms of Y, ``back`` undoes it.
    """

    g: LinearChange

    @classmethod
    def for_forms(cls, forms, n, field):
        return cls(completing_change(forms, n, field))

    def forward(self, f: Polynomial) -> Polynomial:
        return apply_linear_change(self.g, f)

    def back(self, f: Polynomial) -> Polynomial:
        return apply_linear_change(self.g.inverse(), f)

    def ideal_forward(self, I):
        return I.map(self.forward)

    def ideal_back(self, I):
        return I.map(self.back)


def colon_linear(I: HomogeneousIdeal, l: LinearForm, power=1) -> HomogeneousIdeal:
    rot = Rotation.for_forms([l], I.n, I.field)
    J = colon_last_variable(rot.ideal_forward(I), power)
    return reduced(rot.ideal_back(J))


# -- elimination ---------------------------------------------------------------

def _eliminate_tag(polys, n, field):
    """Generators free of the tag variable (slot n) in a basis for the elimination order."""
    cdc = get_codec(TermOrder.RLEX, n + 1, True)
    basis, _ = groebner_core([encode_poly(f, cdc) for f in polys], cdc,
                             field.characteristic)
    dec = cdc.decode
    out = []
    for lm, tail in basis:
        terms = {dec(lm): field.one()}
        terms.update({dec(m): v for m, v in tail.items()})
        if any(e[-1] for e in terms):
            continue
        out.append(Polynomial({e[:-1]: c for e, c in terms.items()}, n, field,
                              _canonical=True))
    return out


def intersect(I: HomogeneousIdeal, J: HomogeneousIdeal) -> HomogeneousIdeal:
    """I cap J by eliminating t from t*I + (1 - t)*J (t of degree zero)."""
    _same_ring(I, J)
    n, field = I.n, I.field
    if I.is_zero() or J.is_zero():
        return HomogeneousIdeal.zero(n, field)
    if is_unit(I):
        return reduced(J)
    if is_unit(J):
        return reduced(I)
    t = Polynomial.variable(n, n + 1, field)
    one_minus_t = Polynomial.constant(1, n + 1, field) - t
    polys = [t * g.extend_variables(1) for g in I.generators]
    polys += [one_minus_t * g.extend_variables(1) for g in J.generators]
    return reduced(HomogeneousIdeal(_eliminate_tag(polys, n, field), n, field))


def exact_divide(h: Polynomial, f: Polynomial) -> Polynomial:
    """h / f, raising ValueError if f does not divide h."""
    cdc = get_codec(TermOrder.RLEX, h.n)
    p = h.field.characteristic
    fd = encode_poly(f, cdc)
    flm, ftail = _monic(fd, p)
    fc = fd[flm]
    inv = h.field.inv(fc)
    plain, guard = cdc.plain, cdc.guard
    pf = plain(flm)
    r = encode_poly(h, cdc)
    q = {}
    while r:
        m = max(r)
        if ((plain(m) | guard) - pf) & guard != guard:
            raise ValueError("polynomial does not divide exactly")
        c = r.pop(m)
        s = m - flm
        q[s] = h.field.mul(c, inv)
        for fm, fv in ftail.items():
            mm = fm + s
            v = (r.get(mm, 0) - c * fv) % p if p else r.get(mm, 0) - c * fv
            if v:
                r[mm] = v
            else:
                r.pop(mm, None)
    dec = cdc.decode
    return Polynomial({dec(m): v for m, v in q.items()}, h.n, h.field, _canonical=True)


def colon_ideal(I: HomogeneousIdeal, f: Polynomial, method="auto") -> HomogeneousIdeal:
    """I : f.

    ``elimination`` computes I cap (f) by a tag variable and divides by f;
    ``rotation`` (linear f only) moves f to the last variable; ``auto`` uses
    rotation for linear forms and elimination otherwise.
    """
    if f.is_zero() or not f.is_homogeneous():
        raise ValueError("colon needs a nonzero homogeneous polynomial")
    if f.n != I.n or f.field != I.field:
        raise AmbientMismatch("polynomial and ideal live in different rings")
    if f.degree() == 0:
        return reduced(I)
    if method == "auto":
        method = "rotation" if f.degree() == 1 else "elimination"
    if method == "rotation":
        if f.degree() != 1:
            raise ValueError("rotation colon needs a linear form")
        coeffs = [f.coefficient(tuple(int(j == i) for j in range(f.n))) for i in range(f.n)]
        return colon_linear(I, LinearForm(tuple(coeffs), f.field))
    if method != "elimination":
        raise ValueError(f"unknown colon method {method!r}")
    if I.is_zero():
        return HomogeneousIdeal.zero(I.n, I.field)
    inter = intersect(I, HomogeneousIdeal([f], I.n, I.field))
    return reduced(HomogeneousIdeal([exact_divide(g, f) for g in inter.generators],
                                    I.n, I.field))


def colon_maximal(I: HomogeneousIdeal) -> HomogeneousIdeal:
    """I : m as the intersection of the colons by each variable."""
    out = colon_variable(I, 0)
    for i in range(1, I.n):
        out = intersect(out, colon_variable(I, i))
    return out


def saturation(I: HomogeneousIdeal) -> HomogeneousIdeal:
    """I : m^inf = intersection over i of I : X_i^inf."""
    out = colon_variable(I, 0, None)
    for i in range(1, I.n):
        out = intersect(out, colon_variable(I, i, None))
    return out


def saturate(I: HomogeneousIdeal, target=MAXIMAL, cap=SATURATION_CAP):
    """Iterated colon until stable; returns (I : target^inf, index K)."""
    if isinstance(target, LinearForm):
        target = target.as_polynomial()
    current = reduced(I)
    for k in range(cap + 1):
        if target == MAXIMAL:
            nxt = colon_maximal(current)
        else:
            nxt = colon_ideal(current, target)
        if ideal_equal(nxt, current):
            return current, k
        current = nxt
    raise ResourceCapExceeded(f"saturation did not stabilise within {cap} steps")


# -- almost-regular forms ---------------------------------------------------------

def is_almost_regular(I: HomogeneousIdeal, l: LinearForm, method="saturation") -> bool:
    """Whether l is almost-regular on R/I.

    ``saturation`` tests (I : l) inside I^sat; ``length`` tests that (I : l)/I
    has finite length through Hilbert series. The two are equivalent.
    """
    col = colon_linear(I, l)
    if method == "saturation":
        return ideal_contains(saturation(I), col)
    if method == "length":
        diff_ok = True
        try:
            length_between(I, col)
        except ValueError:
            diff_ok = False
        return diff_ok
    raise ValueError(f"unknown almost-regular test {method!r}")


def almost_regular_sequence(I: HomogeneousIdeal, count: int, seed=0, retries=50,
                            method="saturation"):
    """Random forms [l_n, l_{n-1}, ...], each almost-regular modulo the previous ones."""
    rng = random.Random(seed)
    field = I.field
    forms = []
    J = I
    for _ in range(count):
        for _attempt in range(retries):
            l = LinearForm.random(I.n, field, rng)
            rows = [f.coefficients for f in forms] + [l.coefficients]
            if matrix_rank(rows, field) < len(rows):
                continue
            if is_almost_regular(J, l, method):
                break
        else:
            raise GenericityError(
                f"no almost-regular form found in {retries} tries over {field}")
        forms.append(l)
        J = J + l.as_polynomial()
    return forms


# -- generic initial ideals -------------------------------------------------------

@dataclass(frozen=True)
class GinResult:
    ideal: MonomialIdeal
    agreement: int
    samples: int
    order: TermOrder

    def __iter__(self):
        return iter(self.ideal.generators)


def largeness_key(J: MonomialIdeal, order=TermOrder.RLEX):
    """Sort key that grows with the monomials of each graded piece of J.

    Among ideals with equal Hilbert function the generic initial ideal has
    the largest key.
    """
    by_deg = {}
    for g in J.generators:
        by_deg.setdefault(sum(g), []).append(order.key(g))
    top = max(by_deg, default=0)
    return tuple(tuple(sorted(by_deg.get(k, []), reverse=True)) for k in range(top + 1))


def gin(I: HomogeneousIdeal, order=TermOrder.RLEX, seed=0, trials=3,
        max_trials=None) -> GinResult:
    """Consensus generic initial ideal over random dense coordinate changes.

    Returns the largest sampled initial ideal once it has been seen twice;
    sampling continues up to ``max_trials`` (default 4 * trials).
    """
    if trials < 2:
        raise ValueError("gin needs at least two trials")
    order = TermOrder(order)
    max_trials = max_trials or 4 * trials
    rng = random.Random(seed)
    counts, keys = {}, {}
    samples = 0
    while samples < max_trials:
        g = LinearChange.random(I.n, I.field, rng)
        J = initial_ideal(I.map(lambda f: apply_linear_change(g, f)), order)
        samples += 1
        counts[J] = counts.get(J, 0) + 1
        keys[J] = largeness_key(J, order)
        if samples >= trials:
            best = max(counts, key=lambda K: keys[K])
            if counts[best] >= 2:
                return GinResult(best, counts[best], samples, order)
    raise GenericityError(f"no two of {samples} initial ideals agree on the largest one "
                          f"over {I.field}")


def random_form(n, field: FieldSpec, rng) -> LinearForm:
    return LinearForm.random(n, field, rng)

"""Buchberger's algorithm with the normal selection strategy.

Polynomials are converted to ``{code: coeff}`` dicts where ``code`` comes from
a MonomialCodec, so the leading monomial of a dict is ``max(dict)``. Basis
elements are stored monic, as (leading code, tail dict) pairs.

Pair handling follows the Gebauer-Moeller update (product and chain
criteria). Input generators are queued next to S-pairs by degree, pairs
first, which makes the nonzero inputs at their turn a minimal generating set.
"""

from __future__ import annotations

import heapq
import os
from functools import lru_cache

from regbound.algebra.orders import TermOrder, codec as get_codec
from regbound.algebra.polynomial import Polynomial
from regbound.errors import ResourceCapExceeded
from regbound.monomial.ideal import MonomialIdeal

STEP_CAP_ENV = "REGBOUND_MAX_GB_STEPS"


def step_cap():
    value = os.environ.get(STEP_CAP_ENV)
    return int(value) if value else None


def encode_poly(f: Polynomial, cdc):
    enc = cdc.encode
    return {enc(e): c for e, c in f.terms.items()}


def decode_poly(d, cdc, n, field):
    dec = cdc.decode
    return Polynomial({dec(c): v for c, v in d.items()}, n, field, _canonical=True)


class _Reducers:
    """Monic basis elements usable for division."""

    def __init__(self, cdc, p):
        self.cdc = cdc
        self.p = p
        self.lm = []
        self.lmp = []
        self.tail = []

    def add(self, lm, tail):
        self.lm.append(lm)
        self.lmp.append(self.cdc.plain(lm))
        self.tail.append(tail)

    def normal_form(self, f, full=True):
        """Remainder of dict ``f`` (not modified)."""
        f = dict(f)
        r = {}
        plain = self.cdc.plain
        guard = self.cdc.guard
        lms, lmps, tails = self.lm, self.lmp, self.tail
        p = self.p
        nred = len(lmps)
        while f:
            m = max(f)
            c = f.pop(m)
            pg = plain(m) | guard
            k = 0
            while k < nred:
                if (pg - lmps[k]) & guard == guard:
                    break
                k += 1
            if k == nred:
                r[m] = c
                if not full:
                    r.update(f)
                    return r
                continue
            shift = m - lms[k]
            get = f.get
            if p:
                for gm, gc in tails[k].items():
                    mm = gm + shift
                    v = (get(mm, 0) - c * gc) % p
                    if v:
                        f[mm] = v
                    else:
                        f.pop(mm, None)
            else:
                for gm, gc in tails[k].items():
                    mm = gm + shift
                    v = get(mm, 0) - c * gc
                    if v:
                        f[mm] = v
                    else:
                        f.pop(mm, None)
        return r


def _monic(d, p):
    lm = max(d)
    c = d[lm]
    if p:
        inv = pow(c, -1, p)
        tail = {m: v * inv % p for m, v in d.items() if m != lm}
    else:
        inv = 1 / c
        tail = {m: v * inv for m, v in d.items() if m != lm}
    return lm, tail


def _divides_t(u, v):
    return all(a <= b for a, b in zip(u, v))


def _lcm_t(u, v):
    return tuple(a if a > b else b for a, b in zip(u, v))


def _coprime_t(u, v):
    return not any(a and b for a, b in zip(u, v))


def groebner_core(polys, cdc, p, max_steps=None):
    """Reduced Groebner basis of encoded dicts.

    Returns ``(basis, minimal_grades)``: basis is a list of (lm, tail) sorted by
    decreasing lm; ``minimal_grades`` lists the grade of every input that
    survived reduction at its turn.
    """
    if max_steps is None:
        max_steps = step_cap()
    red = _Reducers(cdc, p)
    lmt = []           # decoded leading monomials, all elements ever added
    active = []        # indices forming the current minimal basis
    alive = {}         # (i, j) -> lcm tuple
    heap = []
    grade = cdc.grade
    for idx, f in enumerate(polys):
        if f:
            heapq.heappush(heap, (grade(max(f)), 1, idx, idx, -1))
    minimal_grades = []
    elements = []      # (lm, tail) aligned with lmt
    steps = 0

    while heap:
        g, kind, key, i, j = heapq.heappop(heap)
        if kind == 0:
            if alive.pop((i, j), None) is None:
                continue
            lmi, ti = elements[i]
            lmj, tj = elements[j]
            lcm = cdc.encode(_lcm_t(lmt[i], lmt[j]))
            si, sj = lcm - lmi, lcm - lmj
            h = {m + si: v for m, v in ti.items()}
            if p:
                for m, v in tj.items():
                    mm = m + sj
                    w = (h.get(mm, 0) - v) % p
                    if w:
                        h[mm] = w
                    else:
                        h.pop(mm, None)
            else:
                for m, v in tj.items():
                    mm = m + sj
                    w = h.get(mm, 0) - v
                    if w:
                        h[mm] = w
                    else:
                        h.pop(mm, None)
        else:
            h = polys[key]
        steps += 1
        if max_steps is not None and steps > max_steps:
            raise ResourceCapExceeded(f"Buchberger exceeded {max_steps} steps")
        if not h:
            continue
        h = red.normal_form(h)
        if not h:
            continue
        if kind == 1:
            minimal_grades.append(g)
        lm, tail = _monic(h, p)
        k = len(elements)
        elements.append((lm, tail))
        t = cdc.decode(lm)
        lmt.append(t)

        # Gebauer-Moeller update
        lcms = {i2: _lcm_t(lmt[i2], t) for i2 in active}
        cands = list(active)
        kept = []
        while cands:
            i2 = cands.pop(0)
            li = lcms[i2]
            if _coprime_t(lmt[i2], t) or (
                    not any(_divides_t(lcms[j2], li) for j2 in cands)
                    and not any(_divides_t(lcms[j2], li) for j2 in kept)):
                kept.append(i2)
        new_pairs = [i2 for i2 in kept if not _coprime_t(lmt[i2], t)]
        for pair, lij in list(alive.items()):
            a, b = pair
            if _divides_t(t, lij) and lij != lcms.get(a) and lij != lcms.get(b):
                del alive[pair]
        for i2 in new_pairs:
            lij = lcms[i2]
            alive[(i2, k)] = lij
            c = cdc.encode(lij)
            heapq.heappush(heap, (grade(c), 0, c, i2, k))
        active = [i2 for i2 in active if not _divides_t(t, lmt[i2])] + [k]
        red = _Reducers(cdc, p)
        for i2 in active:
            red.add(*elements[i2])

    # inter-reduce the minimal basis
    basis = sorted((elements[i2] for i2 in active), key=lambda e: e[0])
    reduced = []
    for idx, (lm, tail) in enumerate(basis):
        others = _Reducers(cdc, p)
        for jdx, (lm2, tail2) in enumerate(basis):
            if jdx != idx:
                others.add(lm2, tail2)
        reduced.append((lm, others.normal_form(tail)))
    reduced.sort(key=lambda e: e[0], reverse=True)
    return reduced, minimal_grades


class GroebnerBasis:
    """Reduced Groebner basis of a homogeneous ideal under a fixed order."""

    def __init__(self, basis, cdc, order, n, field, minimal_grades=None):
        self._basis = basis
        self._codec = cdc
        self.order = order
        self.n = n
        self.field = field
        self.minimal_grades = tuple(minimal_grades) if minimal_grades is not None else None
        dec = cdc.decode
        self.leading_monomials = tuple(dec(lm) for lm, _ in basis)
        self.elements = tuple(
            Polynomial({dec(lm): field.one(), **{dec(m): v for m, v in tail.items()}},
                       n, field, _canonical=True)
            for lm, tail in basis)
        red = _Reducers(cdc, field.characteristic)
        for lm, tail in basis:
            red.add(lm, tail)
        self._reducers = red

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def initial_ideal(self) -> MonomialIdeal:
        if not self.leading_monomials:
            return MonomialIdeal.zero(self.n)
        return MonomialIdeal(self.leading_monomials, self.n)

    def generating_degree(self):
        """Largest degree of a minimal generator of the input ideal."""
        if self.minimal_grades is None:
            raise ValueError("generator degrees were not tracked for this basis")
        return max(self.minimal_grades, default=0)

    def normal_form(self, f: Polynomial) -> Polynomial:
        d = encode_poly(f, self._codec)
        return decode_poly(self._reducers.normal_form(d), self._codec, self.n, self.field)

    def contains(self, f: Polynomial) -> bool:
        return not self._reducers.normal_form(encode_poly(f, self._codec))

    def contains_ideal(self, I) -> bool:
        return all(self.contains(g) for g in I.generators)

    def __eq__(self, other):
        return (isinstance(other, GroebnerBasis) and self.order == other.order
                and self.n == other.n and self.field == other.field
                and set(self.elements) == set(other.elements))

    def __hash__(self):
        return hash((self.order, self.n, frozenset(self.elements)))

    def __repr__(self):
        body = ", ".join(str(g) for g in self.elements)
        return f"GroebnerBasis([{body}], {self.order.value})"


@lru_cache(maxsize=512)
def buchberger(I, order=TermOrder.RLEX, max_steps=None) -> GroebnerBasis:
    """Reduced Groebner basis of a HomogeneousIdeal (deterministic, cached)."""
    order = TermOrder(order)
    cdc = get_codec(order, I.n)
    polys = [encode_poly(g, cdc) for g in I.generators]
    basis, grades = groebner_core(polys, cdc, I.field.characteristic, max_steps)
    return GroebnerBasis(basis, cdc, order, I.n, I.field, grades)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    return G.normal_form(f)

"""Term orders on exponent vectors and an additive integer encoding of monomials.

Monomials are plain tuples of non-negative ints. All orders satisfy
X_1 > X_2 > ... > X_n.

The Groebner engine works on integers instead of tuples: a ``MonomialCodec``
maps an exponent vector to an int whose natural ordering *is* the term order
and which is additive (``code(u*v) == code(u) + code(v)``). Leading terms are
then ``max(dict)`` and multiplying by a monomial is one int addition.
Divisibility uses a separate packed form with a guard bit per 16-bit field.
"""

from __future__ import annotations

import enum
from functools import lru_cache

from regbound.errors import AmbientMismatch

FIELD_BITS = 16
BASE = 1 << FIELD_BITS
MAX_EXPONENT = (1 << (FIELD_BITS - 1)) - 1


class TermOrder(str, enum.Enum):
    RLEX = "rlex"
    LEX = "lex"
    GRLEX = "grlex"

    def key(self, e):
        """Sort key: ``key(u) > key(v)`` iff u is greater than v."""
        if self is TermOrder.RLEX:
            return (sum(e),) + tuple(-x for x in reversed(e))
        if self is TermOrder.GRLEX:
            return (sum(e),) + tuple(e)
        return tuple(e)


class Cmp(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def term_compare(order: TermOrder, u, v) -> Cmp:
    if len(u) != len(v):
        raise AmbientMismatch(f"monomials in {len(u)} and {len(v)} variables")
    ku, kv = order.key(u), order.key(v)
    if ku == kv:
        return Cmp.EQUAL
    return Cmp.GREATER if ku > kv else Cmp.LESS


def _check_exponents(e):
    for x in e:
        if x < 0 or x > MAX_EXPONENT:
            raise OverflowError(f"exponent {x} outside [0, {MAX_EXPONENT}]")


class MonomialCodec:
    """Order-preserving additive int encoding for one (order, n) pair.

    ``plain(code)`` recovers a packed vector ``sum e_i * BASE**slot(i)`` on
    which ``divides`` is a single subtraction and mask.
    """

    def __init__(self, order, n: int, eliminate_last: bool = False):
        self.order = order
        self.n = n
        self.eliminate_last = eliminate_last
        self.guard = sum(1 << (FIELD_BITS * i + FIELD_BITS - 1) for i in range(n))
        self._bn = FIELD_BITS * n
        if eliminate_last:
            # x-degree, then tag exponent, then rlex on the x variables
            self._bx = FIELD_BITS * (n - 1)
            self.encode = self._encode_elim
            self.plain = self._plain_elim
            self.grade = self._grade_elim
        elif order is TermOrder.RLEX:
            self.encode = self._encode_rlex
            self.plain = self._plain_rlex
            self.grade = self._grade_rlex
        elif order is TermOrder.GRLEX:
            self.encode = self._encode_grlex
            self.plain = self._plain_grlex
            self.grade = self._grade_grlex
        else:
            self.encode = self._encode_lex
            self.plain = self._plain_lex
            self.grade = self._grade_lex

    # rlex: deg * B^n - sum e_i B^(i-1); e_n sits in the top slot, negated
    def _encode_rlex(self, e):
        _check_exponents(e)
        packed = 0
        for i, x in enumerate(e):
            packed |= x << (FIELD_BITS * i)
        return (sum(e) << self._bn) - packed

    def _grade_rlex(self, c):
        return -((-c) >> self._bn)

    def _plain_rlex(self, c):
        return (self._grade_rlex(c) << self._bn) - c

    def _slot_rlex(self, i):
        return i

    # grlex: deg * B^n + sum e_i B^(n-i)
    def _encode_grlex(self, e):
        _check_exponents(e)
        packed = 0
        for x in e:
            packed = (packed << FIELD_BITS) | x
        return (sum(e) << self._bn) | packed

    def _grade_grlex(self, c):
        return c >> self._bn

    def _plain_grlex(self, c):
        return c & ((1 << self._bn) - 1)

    # lex: sum e_i B^(n-i)
    def _encode_lex(self, e):
        _check_exponents(e)
        packed = 0
        for x in e:
            packed = (packed << FIELD_BITS) | x
        return packed

    def _grade_lex(self, c):
        return sum(self.decode(c))

    def _plain_lex(self, c):
        return c

    # elimination of the last variable t: xdeg * B^n + t * B^(n-1) - packed(x)
    def _encode_elim(self, e):
        _check_exponents(e)
        packed = 0
        for i, x in enumerate(e[:-1]):
            packed |= x << (FIELD_BITS * i)
        return (sum(e[:-1]) << self._bn) + (e[-1] << self._bx) - packed

    def _grade_elim(self, c):
        return (-((-c) >> self._bx)) >> FIELD_BITS

    def _plain_elim(self, c):
        q = -((-c) >> self._bx)
        t = q & (BASE - 1)
        return (q << self._bx) - c + (t << self._bx)

    def decode(self, c):
        """Exponent tuple of a code."""
        p = self.plain(c)
        mask = BASE - 1
        if self.eliminate_last or self.order is TermOrder.RLEX:
            return tuple((p >> (FIELD_BITS * i)) & mask for i in range(self.n))
        return tuple((p >> (FIELD_BITS * (self.n - 1 - i))) & mask
                     for i in range(self.n))

    def divides(self, pu, pv):
        """Whether plain-packed ``pu`` divides plain-packed ``pv``."""
        return ((pv | self.guard) - pu) & self.guard == self.guard


@lru_cache(maxsize=None)
def codec(order, n: int, eliminate_last: bool = False) -> MonomialCodec:
    return MonomialCodec(order, n, eliminate_last)

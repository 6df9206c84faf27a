"""Sparse polynomials over an exact field.

Terms are stored as ``{exponent tuple: nonzero scalar}``; no order is baked
into the storage, leading terms are taken on demand for a given TermOrder.
"""

from __future__ import annotations

from regbound.algebra.field import FieldSpec, QQ
from regbound.algebra.orders import TermOrder
from regbound.errors import AmbientMismatch, FieldError


def variable_names(n):
    return [f"X{i + 1}" for i in range(n)]


class Polynomial:
    __slots__ = ("terms", "n", "field", "_hash")

    def __init__(self, terms, n: int, field: FieldSpec = QQ, _canonical=False):
        if _canonical:
            self.terms = terms
        else:
            clean = {}
            for e, c in dict(terms).items():
                e = tuple(int(x) for x in e)
                if len(e) != n:
                    raise AmbientMismatch(f"exponent {e} is not of length {n}")
                c = field(c)
                if c:
                    clean[e] = field.add(clean.get(e, field.zero()), c)
                    if not clean[e]:
                        del clean[e]
            self.terms = clean
        self.n = n
        self.field = field
        self._hash = None

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, n, field=QQ):
        return cls({}, n, field, _canonical=True)

    @classmethod
    def constant(cls, c, n, field=QQ):
        return cls({(0,) * n: c}, n, field)

    @classmethod
    def monomial(cls, e, field=QQ, coeff=1):
        e = tuple(e)
        return cls({e: coeff}, len(e), field)

    @classmethod
    def variable(cls, i, n, field=QQ):
        """The variable X_{i+1} (0-based index ``i``)."""
        e = [0] * n
        e[i] = 1
        return cls({tuple(e): 1}, n, field)

    @classmethod
    def linear(cls, coeffs, field=QQ):
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
        return cls(terms, n, field)

    # -- queries ------------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def is_monomial(self):
        return len(self.terms) == 1

    def monomials(self):
        return list(self.terms)

    def coefficient(self, e):
        return self.terms.get(tuple(e), self.field.zero())

    def leading_term(self, order=TermOrder.RLEX):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def leading_monomial(self, order=TermOrder.RLEX):
        return self.leading_term(order)[0]

    def sorted_terms(self, order=TermOrder.RLEX):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    # -- arithmetic ---------------------------------------------------------
    def _check(self, other):
        if self.n != other.n:
            raise AmbientMismatch(f"{self.n} vs {other.n} variables")
        if self.field != other.field:
            raise FieldError(f"{self.field} vs {other.field}")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(other, self.n, self.field)

    def __add__(self, other):
        other = self._lift(other)
        f = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = f.add(out.get(e, 0), c)
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial(out, self.n, f, _canonical=True)

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        return Polynomial({e: f.neg(c) for e, c in self.terms.items()}, self.n, f,
                          _canonical=True)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c):
        f = self.field
        c = f(c)
        if not c:
            return Polynomial.zero(self.n, f)
        return Polynomial({e: f.mul(c, v) for e, v in self.terms.items()}, self.n, f,
                          _canonical=True)

    def mul_monomial(self, e, c=1):
        f = self.field
        c = f(c)
        if not c:
            return Polynomial.zero(self.n, f)
        return Polynomial({tuple(a + b for a, b in zip(m, e)): f.mul(c, v)
                           for m, v in self.terms.items()}, self.n, f, _canonical=True)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        f = self.field
        p = f.characteristic
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        if p:
            out = {e: c % p for e, c in out.items() if c % p}
        else:
            out = {e: c for e, c in out.items() if c}
        return Polynomial(out, self.n, f, _canonical=True)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1, self.n, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def monic(self, order=TermOrder.RLEX):
        if not self.terms:
            return self
        _, c = self.leading_term(order)
        return self.scale(self.field.inv(c))

    def substitute_zero(self, indices):
        """Set the variables with the given 0-based indices to zero."""
        idx = set(indices)
        return Polynomial({e: c for e, c in self.terms.items()
                           if all(e[i] == 0 for i in idx)}, self.n, self.field,
                          _canonical=True)

    def truncate_variables(self, k):
        """Drop trailing variables k.. that must not occur; result lives in k variables."""
        out = {}
        for e, c in self.terms.items():
            if any(e[k:]):
                raise ValueError("polynomial involves a dropped variable")
            out[e[:k]] = c
        return Polynomial(out, k, self.field, _canonical=True)

    def extend_variables(self, extra):
        """Embed into a ring with ``extra`` additional trailing variables."""
        pad = (0,) * extra
        return Polynomial({e + pad: c for e, c in self.terms.items()}, self.n + extra,
                          self.field, _canonical=True)

    def permute(self, perm):
        """New polynomial in which variable i takes the place of variable perm[i]."""
        out = {}
        for e, c in self.terms.items():
            ne = [0] * self.n
            for i, x in enumerate(e):
                ne[perm[i]] = x
            out[tuple(ne)] = c
        return Polynomial(out, self.n, self.field, _canonical=True)

    # -- identity -----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return (self.n == other.n and self.field == other.field
                    and self.terms == other.terms)
        if not self.terms:
            return other == 0
        if isinstance(other, int) and len(self.terms) == 1:
            e, c = next(iter(self.terms.items()))
            return not any(e) and c == self.field(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.field, frozenset(self.terms.items())))
        return self._hash

    def to_string(self, names=None, order=TermOrder.RLEX):
        names = names or variable_names(self.n)
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms(order):
            mono = "*".join(n if x == 1 else f"{n}^{x}" for n, x in zip(names, e) if x)
            neg = not self.field.characteristic and c < 0
            mag = -c if neg else c
            coeff = str(mag) if getattr(mag, "denominator", 1) == 1 else f"({mag})"
            if not mono:
                body = coeff
            else:
                body = mono if mag == 1 else f"{coeff}*{mono}"
            parts.append(("- " if neg else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __repr__(self):
        return f"Polynomial({self.to_string()!r}, n={self.n}, {self.field})"

    __str__ = to_string

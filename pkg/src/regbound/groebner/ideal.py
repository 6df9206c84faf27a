"""Homogeneous ideals given by generator lists."""

from __future__ import annotations

from regbound.algebra.field import FieldSpec, QQ
from regbound.algebra.polynomial import Polynomial
from regbound.errors import AmbientMismatch, FieldError


class HomogeneousIdeal:
    """Ideal of K[X_1..X_n] generated by nonzero homogeneous polynomials.

    Equality and hashing are structural (same generator tuple); use
    ``ideal_equal`` for equality of ideals.
    """

    __slots__ = ("generators", "n", "field", "_hash")

    def __init__(self, generators, n=None, field=None):
        gens = [g for g in generators if not g.is_zero()]
        if n is None:
            if not generators:
                raise ValueError("cannot infer n for an empty generator list")
            n = generators[0].n
        if field is None:
            field = generators[0].field if generators else QQ
        for g in gens:
            if g.n != n:
                raise AmbientMismatch(f"generator in {g.n} variables, ring has {n}")
            if g.field != field:
                raise FieldError(f"generator over {g.field}, ring over {field}")
            if not g.is_homogeneous():
                raise ValueError(f"generator {g} is not homogeneous")
        self.generators = tuple(gens)
        self.n = n
        self.field = field
        self._hash = None

    @classmethod
    def from_monomial(cls, I, field: FieldSpec = QQ):
        return cls([Polynomial.monomial(u, field) for u in I.generators], I.n, field)

    @classmethod
    def zero(cls, n, field=QQ):
        return cls([], n, field)

    def is_zero(self):
        return not self.generators

    def degrees(self):
        return [g.degree() for g in self.generators]

    def max_degree(self):
        return max(self.degrees(), default=0)

    def is_monomial(self):
        return all(g.is_monomial() for g in self.generators)

    def __add__(self, other):
        if isinstance(other, Polynomial):
            other = [other]
        else:
            if other.n != self.n or other.field != self.field:
                raise AmbientMismatch("sum of ideals in different rings")
            other = list(other.generators)
        return HomogeneousIdeal(list(self.generators) + other, self.n, self.field)

    def map(self, fn, n=None):
        """Apply ``fn`` to each generator; ``n`` is the ambient count of the result."""
        return HomogeneousIdeal([fn(g) for g in self.generators],
                                self.n if n is None else n, self.field)

    def __eq__(self, other):
        return (isinstance(other, HomogeneousIdeal) and self.n == other.n
                and self.field == other.field and self.generators == other.generators)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.field, self.generators))
        return self._hash

    def to_string(self, names=None):
        return ", ".join(g.to_string(names) for g in self.generators) or "0"

    def __repr__(self):
        return f"HomogeneousIdeal([{self.to_string()}], n={self.n}, {self.field})"

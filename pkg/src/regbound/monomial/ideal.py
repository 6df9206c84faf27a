"""Monomial ideals held by their minimal generators G(I)."""

from __future__ import annotations

from dataclasses import dataclass
import numpy as np

from regbound.errors import AmbientMismatch


def divides(u, v) -> bool:
    return all(a <= b for a, b in zip(u, v))


def minimal_set(gens):
    """Divisibility-minimal subset of ``gens``, sorted for a canonical form."""
    gens = sorted({tuple(g) for g in gens}, key=lambda g: (sum(g), g))
    kept = []
    for g in gens:
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return tuple(sorted(kept, key=lambda g: (sum(g), tuple(-x for x in g))))


@dataclass(frozen=True, init=False)
class MonomialIdeal:
    """Ideal of K[X_1..X_n] generated by monomials.

    ``generators`` is always the minimal generating set, in a canonical order
    (by degree, then lexicographically decreasing). The empty tuple is the
    zero ideal and ``((0,)*n,)`` the unit ideal.
    """

    generators: tuple
    n: int

    def __init__(self, generators, n=None):
        gens = [tuple(int(x) for x in g) for g in generators]
        if n is None:
            if not gens:
                raise ValueError("cannot infer ambient n of the zero ideal")
            n = len(gens[0])
        for g in gens:
            if len(g) != n or any(x < 0 for x in g):
                raise AmbientMismatch(f"bad exponent vector {g} for n={n}")
        object.__setattr__(self, "generators", minimal_set(gens))
        object.__setattr__(self, "n", n)

    @classmethod
    def unit(cls, n):
        return cls([(0,) * n], n)

    @classmethod
    def zero(cls, n):
        return cls([], n)

    @classmethod
    def maximal(cls, n):
        return cls([tuple(int(i == j) for j in range(n)) for i in range(n)], n)

    def is_zero(self):
        return not self.generators

    def is_unit(self):
        return any(not any(g) for g in self.generators)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def degrees(self):
        return [sum(g) for g in self.generators]

    def generating_degree(self):
        return max(self.degrees(), default=0)

    def md(self):
        """Maximal exponent of each variable over G(I)."""
        if not self.generators:
            return (0,) * self.n
        return tuple(max(col) for col in zip(*self.generators))

    def array(self):
        if not self.generators:
            return np.zeros((0, self.n), dtype=np.int64)
        return np.array(self.generators, dtype=np.int64)

    def contains(self, u) -> bool:
        return any(divides(g, u) for g in self.generators)

    __contains__ = contains

    def contains_many(self, U):
        """Boolean membership vector for the rows of an integer array U."""
        U = np.asarray(U, dtype=np.int64)
        if not self.generators:
            return np.zeros(len(U), dtype=bool)
        G = self.array()
        return (U[:, None, :] >= G[None, :, :]).all(axis=2).any(axis=1)

    def contains_ideal(self, other) -> bool:
        return all(self.contains(g) for g in other.generators)

    def __le__(self, other):
        return other.contains_ideal(self)

    def in_degree(self, k):
        """Generators of degree exactly k."""
        return [g for g in self.generators if sum(g) == k]

    def __str__(self):
        if not self.generators:
            return "(0)"
        if self.is_unit():
            return "(1)"
        return "(" + ", ".join(monomial_str(g) for g in self.generators) + ")"

    def __repr__(self):
        return f"MonomialIdeal({str(self)}, n={self.n})"


def monomial_str(u, names=None):
    names = names or [f"X{i + 1}" for i in range(len(u))]
    parts = [n if x == 1 else f"{n}^{x}" for n, x in zip(names, u) if x]
    return "*".join(parts) or "1"


def minimalize(gens, n) -> MonomialIdeal:
    return MonomialIdeal(gens, n)


def m_index(u) -> int:
    """m(u): the largest (1-based) index of a variable dividing u; 0 for u = 1."""
    for i in range(len(u) - 1, -1, -1):
        if u[i]:
            return i + 1
    return 0


def restrict_to(I: MonomialIdeal, i: int) -> MonomialIdeal:
    """Image I_[i] of I in K[X_1..X_i] = R/(X_{i+1},...,X_n)."""
    if not 1 <= i <= I.n:
        raise ValueError(f"section index {i} outside 1..{I.n}")
    if i == I.n:
        return I
    return MonomialIdeal([g[:i] for g in I.generators if not any(g[i:])], i)


@dataclass(frozen=True)
class IdealProfile:
    D: int
    md: tuple
    gen_count: int


def profile(I: MonomialIdeal) -> IdealProfile:
    if I.is_zero():
        raise ValueError("profile of the zero ideal")
    return IdealProfile(I.generating_degree(), I.md(), len(I))


def _check_same(I, J):
    if I.n != J.n:
        raise AmbientMismatch(f"{I.n} vs {J.n} variables")


def combine(I: MonomialIdeal, J: MonomialIdeal, mode: str) -> MonomialIdeal:
    _check_same(I, J)
    if mode == "sum":
        return MonomialIdeal(I.generators + J.generators, I.n)
    if mode == "product":
        return MonomialIdeal([tuple(a + b for a, b in zip(u, v))
                              for u in I.generators for v in J.generators], I.n)
    if mode == "intersection":
        return MonomialIdeal([tuple(max(a, b) for a, b in zip(u, v))
                              for u in I.generators for v in J.generators], I.n)
    raise ValueError(f"unknown combine mode {mode!r}")


def colon_by_monomial(I: MonomialIdeal, u) -> MonomialIdeal:
    return MonomialIdeal([tuple(max(a - b, 0) for a, b in zip(g, u))
                          for g in I.generators], I.n)


def monomials_of_degree(n, d):
    """All exponent vectors in n variables of total degree d (lex-decreasing)."""
    if n == 0:
        return [()] if d == 0 else []
    if n == 1:
        return [(d,)]
    out = []
    for a in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - a):
            out.append((a,) + rest)
    return out

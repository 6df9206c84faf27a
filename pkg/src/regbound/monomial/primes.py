"""Associated primes of monomial ideals by exhaustive witness search."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from regbound.monomial.ideal import MonomialIdeal


def box_points(bounds):
    """All integer vectors 0 <= v <= bounds, as an (N, n) int64 array."""
    bounds = tuple(int(b) for b in bounds)
    if not bounds:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.indices(tuple(b + 1 for b in bounds)).reshape(len(bounds), -1).T
    return grids.astype(np.int64)


@dataclass(frozen=True)
class PrimeList:
    """Associated primes P_S = (X_i : i in S), with S given by 1-based indices."""

    n: int
    primes: tuple
    witnesses: dict = field(default_factory=dict, compare=False, hash=False)

    @staticmethod
    def is_lexicographic_set(S) -> bool:
        return set(S) == set(range(1, len(S) + 1))

    def is_lexicographic(self) -> bool:
        return all(self.is_lexicographic_set(S) for S in self.primes)

    def __iter__(self):
        return iter(self.primes)

    def __len__(self):
        return len(self.primes)

    def __str__(self):
        parts = ["(" + ", ".join(f"X{i}" for i in sorted(S)) + ")" for S in self.primes]
        return "{" + ", ".join(parts) + "}"


def membership_table(I: MonomialIdeal) -> np.ndarray:
    """Boolean array T over the box u_i <= Md_i(I) with T[u] iff u in I.

    Membership only depends on min(u, Md(I)) coordinatewise, so clipping any
    exponent vector into the box and indexing T answers u in I.
    """
    md = I.md()
    T = np.zeros(tuple(m + 1 for m in md), dtype=bool)
    for g in I.generators:
        T[g] = True
    for axis in range(I.n):
        np.logical_or.accumulate(T, axis=axis, out=T)
    return T


def _lookup(T, U):
    top = np.array(T.shape) - 1
    C = np.minimum(U, top)
    return T[tuple(C.T)]


def associated_primes(I: MonomialIdeal) -> PrimeList:
    """Every S with I : u = P_S for some u in the box u_i <= Md_i(I)."""
    if I.is_zero() or I.is_unit():
        raise ValueError("associated primes need a nonzero proper ideal")
    n = I.n
    U = box_points(I.md())
    G = I.array()
    T = membership_table(I)
    in_I = _lookup(T, U)
    S = np.zeros((len(U), n), dtype=bool)
    for i in range(n):
        shifted = U.copy()
        shifted[:, i] += 1
        S[:, i] = _lookup(T, shifted)
    # I : u is generated by x^{(g-u)+}; it equals P_S iff each of those has an
    # X_i with i in S, i.e. g_i > u_i for some i in S.
    exceeds = G[None, :, :] > U[:, None, :]
    covered = (exceeds & S[:, None, :]).any(axis=2).all(axis=1)
    ok = covered & ~in_I
    found = {}
    for row in np.nonzero(ok)[0]:
        key = tuple(i + 1 for i in range(n) if S[row, i])
        if key not in found:
            found[key] = tuple(int(x) for x in U[row])
    primes = tuple(sorted(found, key=lambda s: (len(s), s)))
    return PrimeList(n, primes, {k: found[k] for k in primes})


@lru_cache(maxsize=64)
def monomials_up_to(n, top):
    """All exponent vectors of total degree <= top, as a read-only int64 array."""
    pts = box_points((top,) * n)
    pts = pts[pts.sum(axis=1) <= top]
    pts.flags.writeable = False
    return pts


def weakly_stable_all_monomials(I: MonomialIdeal, degree_bound=None) -> bool:
    """Weak stability tested on every u in I of degree <= degree_bound.

    The default bound is D(I) + n * max_i Md_i(I). For each such u and j < m(u)
    the exponent k = max(Md_j(I), 1) is tested, which is decisive for any u
    (a minimal witness generator has X_j-degree at most Md_j(I)).
    """
    if I.is_zero():
        return False
    if I.is_unit():
        return True
    n = I.n
    md = I.md()
    if degree_bound is None:
        degree_bound = I.generating_degree() + n * max(md)
    T = membership_table(I)
    U = monomials_up_to(n, degree_bound)
    U = U[_lookup(T, U)]
    nz = U > 0
    # m(u) as a 0-based index of the last nonzero entry
    m = n - 1 - np.argmax(nz[:, ::-1], axis=1)
    rows = np.arange(len(U))
    for j in range(n - 1):
        sel = m > j
        if not sel.any():
            continue
        V = U[sel].copy()
        V[rows[: len(V)], m[sel]] = 0
        V[:, j] += max(md[j], 1)
        if not _lookup(T, V).all():
            return False
    return True

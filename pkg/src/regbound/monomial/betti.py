"""Graded Betti numbers of monomial ideals.

Two independent routes: the Eliahou-Kervaire formula for stable ideals, and a
brute-force oracle through reduced homology of the upper Koszul simplicial
complexes K^b(I) = {F squarefree : x^(b - F) in I}, with
beta_{i,b}(I) = dim H~_{i-1}(K^b; K).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations
from math import comb

import numpy as np

from regbound.algebra.field import FieldSpec, QQ
from regbound.algebra.linear import matrix_rank
from regbound.errors import NotStableError, ResourceCapExceeded
from regbound.monomial.classify import is_stable
from regbound.monomial.ideal import MonomialIdeal, m_index
from regbound.monomial.primes import box_points

DEFAULT_MULTIDEGREE_CAP = 500_000


@dataclass(frozen=True)
class BettiTable:
    """beta_{i,j} of I (i = 0 counts minimal generators)."""

    entries: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        clean = {k: v for k, v in self.entries.items() if v}
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    @property
    def regularity(self):
        if not self.entries:
            return None
        return max(j - i for i, j in self.entries)

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    def total(self, i):
        return sum(v for (a, _), v in self.entries.items() if a == i)

    def projective_dimension(self):
        return max((i for i, _ in self.entries), default=-1)

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.entries == other.entries

    def __hash__(self):
        return hash(tuple(self.entries.items()))

    def as_rows(self):
        """Macaulay-style rows: {j - i: [beta_{0,.}, beta_{1,.}, ...]}."""
        rows = {}
        pd = self.projective_dimension()
        for (i, j), v in self.entries.items():
            rows.setdefault(j - i, [0] * (pd + 1))[i] = v
        return dict(sorted(rows.items()))


def betti_stable_EK(I: MonomialIdeal) -> BettiTable:
    if I.is_zero():
        return BettiTable({})
    if not is_stable(I):
        raise NotStableError(f"{I} is not stable")
    out = {}
    for u in I.generators:
        deg, m = sum(u), m_index(u)
        for i in range(max(m, 1)):
            c = comb(m - 1, i) if m else int(i == 0)
            if c:
                out[(i, deg + i)] = out.get((i, deg + i), 0) + c
    return BettiTable(out)


def _reduced_homology(faces_by_dim, field: FieldSpec):
    """Ranks of reduced homology H~_k for k = -1 .. top, from face lists."""
    top = max(faces_by_dim) if faces_by_dim else -2
    index = {k: {f: t for t, f in enumerate(fs)} for k, fs in faces_by_dim.items()}
    ranks = {}
    for k in range(0, top + 1):
        # boundary C_k -> C_{k-1}
        rows = []
        lower = index.get(k - 1, {})
        for f in faces_by_dim.get(k, []):
            row = [0] * len(lower)
            for pos in range(len(f)):
                g = f[:pos] + f[pos + 1:]
                row[lower[g]] = field(-1 if pos % 2 else 1)
            rows.append(row)
        ranks[k] = matrix_rank(rows, field) if rows and lower else 0
    out = {}
    for k in range(-1, top + 1):
        fk = len(faces_by_dim.get(k, []))
        out[k] = fk - ranks.get(k, 0) - ranks.get(k + 1, 0)
    return out


def betti_oracle_koszul(I: MonomialIdeal, field: FieldSpec = QQ,
                        cap: int = DEFAULT_MULTIDEGREE_CAP) -> BettiTable:
    """Betti numbers of I from homology of upper Koszul complexes.

    Multidegrees b range over the box b_i <= Md_i(I) + 1; a b that is not the
    lcm of the generators dividing x^b gives a cone and is skipped.
    """
    if I.is_zero():
        return BettiTable({})
    n = I.n
    md = I.md()
    size = 1
    for x in md:
        size *= x + 2
    if size > cap:
        raise ResourceCapExceeded(f"Koszul oracle box has {size} multidegrees > cap {cap}")
    B = box_points(tuple(x + 1 for x in md))
    G = I.array()
    div = (B[:, None, :] >= G[None, :, :]).all(axis=2)       # (N, k)
    in_I = div.any(axis=1)
    B, div = B[in_I], div[in_I]
    lcm = np.where(div[:, :, None], G[None, :, :], 0).max(axis=1)
    B = B[(lcm == B).all(axis=1)]
    out = {}
    for b in B:
        b = tuple(int(x) for x in b)
        support = [i for i in range(n) if b[i]]
        faces = {}
        for s in range(len(support) + 1):
            for F in combinations(support, s):
                v = list(b)
                for i in F:
                    v[i] -= 1
                if I.contains(v):
                    faces.setdefault(s - 1, []).append(F)
        if not faces:
            continue
        ranks = _reduced_homology(faces, field)
        deg = sum(b)
        for k, r in ranks.items():
            if r:
                out[(k + 1, deg)] = out.get((k + 1, deg), 0) + r
    return BettiTable(out)

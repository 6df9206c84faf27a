"""Borel-type predicates on monomial ideals, all evaluated on G(I)."""

from __future__ import annotations

from dataclasses import dataclass

from regbound.algebra.field import FieldSpec, QQ, is_prime
from regbound.monomial.ideal import MonomialIdeal, m_index, restrict_to


@dataclass(frozen=True)
class ClassificationFlags:
    stable: bool
    strongly_stable: bool
    p_borel: bool
    p: int
    weakly_stable: bool
    condition_star: bool
    condition_star_star: bool
    d: int

    def as_dict(self):
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


def p_adic_leq(k: int, l: int, p: int) -> bool:
    """Digit-wise comparison of the base-p expansions of k and l."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 0 or l < 0:
        raise ValueError("p-adic comparison needs non-negative integers")
    while k or l:
        if k % p > l % p:
            return False
        k //= p
        l //= p
    return True


def _exchange(u, j, i, k):
    v = list(u)
    v[i] -= k
    v[j] += k
    return tuple(v)


def is_stable(I: MonomialIdeal) -> bool:
    for u in I.generators:
        m = m_index(u) - 1
        for j in range(m):
            if not I.contains(_exchange(u, j, m, 1)):
                return False
    return True


def is_strongly_stable(I: MonomialIdeal) -> bool:
    for u in I.generators:
        for i, e in enumerate(u):
            if e:
                for j in range(i):
                    if not I.contains(_exchange(u, j, i, 1)):
                        return False
    return True


def is_p_borel(I: MonomialIdeal, p: int) -> bool:
    """Closed under X_j^k u / X_i^k for j < i and k <=_p (exponent of X_i in u).

    ``p = 0`` means characteristic zero, where this is strong stability.
    """
    if p == 0:
        return is_strongly_stable(I)
    for u in I.generators:
        for i, e in enumerate(u):
            if not e:
                continue
            ks = [k for k in range(1, e + 1) if p_adic_leq(k, e, p)]
            for j in range(i):
                for k in ks:
                    if not I.contains(_exchange(u, j, i, k)):
                        return False
    return True


def is_weakly_stable(I: MonomialIdeal) -> bool:
    """Generator test with the single exponent k = max(Md_j(I), 1).

    The set of working k is upward closed and a minimal witness generator has
    X_j-degree at most Md_j(I), so this exponent decides the existential.
    """
    md = I.md()
    for u in I.generators:
        m = m_index(u) - 1
        if m < 0:
            continue
        l = u[m]
        for j in range(m):
            if not I.contains(_weak_image(u, j, m, l, max(md[j], 1))):
                return False
    return True


def _weak_image(u, j, m, l, k):
    v = list(u)
    v[m] -= l
    v[j] += k
    return tuple(v)


def condition_star(I: MonomialIdeal, d: int) -> bool:
    """No gap followed by a restart among generator degrees >= d."""
    if d < 1:
        raise ValueError("condition (*) needs d >= 1")
    degs = set(I.degrees())
    top = I.generating_degree()
    for i in range(d, top + 1):
        if i not in degs and (i + 1) in degs:
            return False
    return True


def condition_star_star(I: MonomialIdeal, d: int) -> bool:
    return all(condition_star(restrict_to(I, i), d) for i in range(1, I.n + 1))


def classify(I: MonomialIdeal, field: FieldSpec = QQ, d: int = 1) -> ClassificationFlags:
    p = field.characteristic
    if I.is_zero() or I.is_unit():
        v = I.is_unit()
        return ClassificationFlags(v, v, v, p, v, v, v, d)
    return ClassificationFlags(
        stable=is_stable(I),
        strongly_stable=is_strongly_stable(I),
        p_borel=is_p_borel(I, p),
        p=p,
        weakly_stable=is_weakly_stable(I),
        condition_star=condition_star(I, d),
        condition_star_star=condition_star_star(I, d),
        d=d,
    )

"""Linear coordinate changes, linear forms, and the Frobenius map."""

from __future__ import annotations

from dataclasses import dataclass

from regbound.algebra.field import FieldSpec, QQ
from regbound.algebra.polynomial import Polynomial
from regbound.errors import AmbientMismatch, FieldError


def _rank_and_inverse(rows, field: FieldSpec):
    """Gauss-Jordan on a square matrix; returns (rank, inverse or None)."""
    n = len(rows)
    a = [list(r) + [field.one() if i == j else field.zero() for j in range(n)]
         for i, r in enumerate(rows)]
    rank = 0
    for col in range(n):
        piv = next((r for r in range(rank, n) if a[r][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = field.inv(a[rank][col])
        a[rank] = [field.mul(inv, x) for x in a[rank]]
        for r in range(n):
            if r != rank and a[r][col]:
                c = a[r][col]
                a[r] = [field.sub(x, field.mul(c, y)) for x, y in zip(a[r], a[rank])]
        rank += 1
    if rank < n:
        return rank, None
    return rank, tuple(tuple(row[n:]) for row in a)


def matrix_rank(rows, field: FieldSpec) -> int:
    """Rank of an arbitrary (possibly non-square) matrix over ``field``."""
    a = [list(r) for r in rows]
    if not a:
        return 0
    m = len(a[0])
    rank = 0
    for col in range(m):
        piv = next((r for r in range(rank, len(a)) if a[r][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = field.inv(a[rank][col])
        pr = [field.mul(inv, x) for x in a[rank]]
        a[rank] = pr
        for r in range(rank + 1, len(a)):
            c = a[r][col]
            if c:
                a[r] = [field.sub(x, field.mul(c, y)) for x, y in zip(a[r], pr)]
        rank += 1
    return rank


@dataclass(frozen=True)
class LinearChange:
    """Invertible n x n matrix acting by the substitution X_i -> sum_j g[i][j] X_j."""

    matrix: tuple
    field: FieldSpec = QQ

    def __post_init__(self):
        m = tuple(tuple(self.field(x) for x in row) for row in self.matrix)
        if any(len(row) != len(m) for row in m):
            raise ValueError("matrix must be square")
        rank, inv = _rank_and_inverse(m, self.field)
        if inv is None:
            raise ValueError(f"matrix is singular (rank {rank} < {len(m)})")
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "_inverse", inv)

    @property
    def n(self):
        return len(self.matrix)

    @classmethod
    def identity(cls, n, field=QQ):
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), field)

    @classmethod
    def random(cls, n, field, rng, bound=10**6):
        """Dense uniform matrix, resampled until invertible."""
        while True:
            rows = tuple(tuple(field.random_element(rng, bound) for _ in range(n))
                         for _ in range(n))
            if _rank_and_inverse(rows, field)[1] is not None:
                return cls(rows, field)

    def inverse(self):
        return LinearChange(self._inverse, self.field)

    def __matmul__(self, other):
        f = self.field
        n = self.n
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                s = f.zero()
                for k in range(n):
                    s = f.add(s, f.mul(self.matrix[i][k], other.matrix[k][j]))
                row.append(s)
            rows.append(tuple(row))
        return LinearChange(tuple(rows), f)


def apply_linear_change(g: LinearChange, f: Polynomial) -> Polynomial:
    """Substitute X_i -> sum_j g[i][j] X_j into f and expand."""
    if g.n != f.n:
        raise AmbientMismatch(f"{g.n}x{g.n} matrix on {f.n} variables")
    if g.field != f.field:
        raise FieldError(f"matrix over {g.field}, polynomial over {f.field}")
    n = f.n
    p = f.field.characteristic
    images = []
    for i in range(n):
        lin = {}
        for j in range(n):
            c = g.matrix[i][j]
            if c:
                e = [0] * n
                e[j] = 1
                lin[tuple(e)] = c
        images.append(lin)
    cache = {(0,) * n: {(0,) * n: f.field.one()}}

    def product(u):
        # product of images[i]**u[i], built one linear factor at a time
        got = cache.get(u)
        if got is not None:
            return got
        i = next(k for k, x in enumerate(u) if x)
        rest = list(u)
        rest[i] -= 1
        base = product(tuple(rest))
        out = {}
        for e1, c1 in base.items():
            for e2, c2 in images[i].items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        if p:
            out = {e: c % p for e, c in out.items() if c % p}
        else:
            out = {e: c for e, c in out.items() if c}
        cache[u] = out
        return out

    total = {}
    for u, c in f.terms.items():
        for e, v in product(u).items():
            total[e] = total.get(e, 0) + c * v
    if p:
        total = {e: c % p for e, c in total.items() if c % p}
    else:
        total = {e: c for e, c in total.items() if c}
    return Polynomial(total, n, f.field, _canonical=True)


@dataclass(frozen=True)
class LinearForm:
    coefficients: tuple
    field: FieldSpec = QQ

    def __post_init__(self):
        coeffs = tuple(self.field(c) for c in self.coefficients)
        if not any(coeffs):
            raise ValueError("linear form must be nonzero")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def n(self):
        return len(self.coefficients)

    def as_polynomial(self) -> Polynomial:
        return Polynomial.linear(self.coefficients, self.field)

    @classmethod
    def random(cls, n, field, rng, bound=10**6):
        while True:
            coeffs = tuple(field.random_element(rng, bound) for _ in range(n))
            if any(coeffs):
                return cls(coeffs, field)

    @classmethod
    def variable(cls, i, n, field=QQ):
        return cls(tuple(int(j == i) for j in range(n)), field)


def completing_change(forms, n, field) -> LinearChange:
    """Coordinates Y in which forms[0] = Y_n, forms[1] = Y_{n-1}, ...

    Returns the substitution g (X -> g Y) to pass to ``apply_linear_change``.
    Raises ValueError if the forms are linearly dependent.
    """
    rows = [tuple(field(c) for c in lf.coefficients) for lf in forms]
    if matrix_rank(rows, field) < len(rows):
        raise ValueError("linear forms are linearly dependent")
    basis = []
    for j in range(n):
        e = tuple(field.one() if k == j else field.zero() for k in range(n))
        if len(basis) + len(rows) == n:
            break
        if matrix_rank(basis + rows + [e], field) > len(basis) + len(rows):
            basis.append(e)
    m = basis + list(reversed(rows))
    return LinearChange(tuple(m), field).inverse()


def frobenius_polynomial(f: Polynomial, p: int) -> Polynomial:
    """Replace every X_i by X_i^p (coefficients untouched)."""
    if f.field.characteristic != p:
        raise FieldError(f"Frobenius for p={p} over {f.field}")
    return Polynomial({tuple(p * x for x in e): c for e, c in f.terms.items()}, f.n,
                      f.field, _canonical=True)


def frobenius_image(I, p: int):
    """Ideal generated by the Frobenius images of the generators of I.

    Accepts a HomogeneousIdeal or a MonomialIdeal.
    """
    from regbound.monomial.ideal import MonomialIdeal

    if isinstance(I, MonomialIdeal):
        return MonomialIdeal([tuple(p * x for x in u) for u in I.generators], I.n)
    if I.field.characteristic != p:
        raise FieldError(f"Frobenius for p={p} over {I.field}")
    return type(I)([frobenius_polynomial(g, p) for g in I.generators], I.n, I.field)

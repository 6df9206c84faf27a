"""Exact evaluation of the regularity bounds and their defining recursions."""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from math import factorial


def int_text(x: int) -> str:
    """Decimal string of an integer of any size (lifts the str-conversion cap)."""
    if not hasattr(sys, "set_int_max_str_digits"):
        return str(x)
    old = sys.get_int_max_str_digits()
    sys.set_int_max_str_digits(0)
    try:
        return str(x)
    finally:
        sys.set_int_max_str_digits(old)


def _check(n, d, c=None):
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if c is not None and not 1 <= c < n:
        raise ValueError(f"c must satisfy 1 <= c < n, got c={c}, n={n}")


def bound_A(n, d):
    """(2d)^(2^(n-2)), the bound through weakly stable ideals."""
    _check(n, d)
    return (2 * d) ** (2 ** (n - 2))


def bound_B(n, d):
    """(2d)^((n-1)!), the bound from cohomological methods."""
    _check(n, d)
    return (2 * d) ** factorial(n - 1)


def bound_main2(n, d, c):
    """(d^c + (d-1)c + 1)^(2^(n-c-1)) for ideals of height c."""
    _check(n, d, c)
    return (d ** c + (d - 1) * c + 1) ** (2 ** (n - c - 1))


def bound_final(n, d):
    """2d - 1 for n = 2, else (d^2 + 2d - 1)^(2^(n-3))."""
    _check(n, d)
    if n == 2:
        return 2 * d - 1
    return (d * d + 2 * d - 1) ** (2 ** (n - 3))


def bound_artinian(n, d):
    _check(n, d)
    return n * (d - 1) + 1


def bound_p3(d):
    """d^4 + 2d^3 + 2d - 1, the n = 4, c = 2 instance."""
    return d ** 4 + 2 * d ** 3 + 2 * d - 1


def cc_recursion(n, d, check=True):
    """[B_1..B_n] with B_1 = d and B_i = d - 1 + prod_{j<i}(B_j + 1)."""
    _check(n, d)
    if d < 2:
        raise ValueError("the closed form comparison needs d >= 2")
    seq = [d]
    prod = d + 1
    for _ in range(2, n + 1):
        b = d - 1 + prod
        seq.append(b)
        prod *= b + 1
    if check:
        assert seq[1] == 2 * d
        for i in range(2, n):
            prev = seq[i - 1]
            assert seq[i] == prev * prev - (d - 2) * prev, (i, seq)
        for i in range(1, n):
            assert seq[i] <= (2 * d) ** (2 ** (i - 1)), (i, seq)
    return seq


def main2_recursion(n, d, c, check=True):
    """[B_0..B_{n-c}]: B_0 = (d-1)c + 1, B_i = B_{i-1} + d^c * prod_{1<=j<i} B_j.

    The product carries the factor d^c so that B_1 - B_0 = d^c and the
    telescoping identity B_i = (B_{i-1} - B_{i-2}) B_{i-1} + B_{i-1} holds.
    """
    _check(n, d, c)
    dc = d ** c
    seq = [(d - 1) * c + 1]
    prod = 1
    for i in range(1, n - c + 1):
        b = seq[-1] + dc * prod
        seq.append(b)
        prod *= b
    if check:
        assert seq[1] - seq[0] == dc
        for i in range(2, len(seq)):
            assert seq[i] == (seq[i - 1] - seq[i - 2]) * seq[i - 1] + seq[i - 1], (i, seq)
        assert seq[-1] <= seq[1] ** (2 ** (n - c - 1)), seq
    return seq


@dataclass(frozen=True)
class BoundReport:
    n: int
    d: int
    c: int | None
    bound_A: int
    bound_B: int
    bound_main2: int | None
    bound_final: int
    bound_artinian: int
    bound_p3: int
    cc_sequence: tuple = field(default=())
    main2_sequence: tuple = field(default=())

    INTEGER_KEYS = ("bound_A", "bound_B", "bound_main2", "bound_final", "bound_artinian",
                    "bound_p3")

    def as_dict(self):
        """JSON-ready mapping; big integers as decimal strings."""
        out = {"n": self.n, "d": self.d, "c": self.c}
        for k in self.INTEGER_KEYS:
            v = getattr(self, k)
            out[k] = None if v is None else int_text(v)
        out["cc_sequence"] = [int_text(x) for x in self.cc_sequence]
        out["main2_sequence"] = [int_text(x) for x in self.main2_sequence]
        return out


def eval_static_bounds(n, d, c=None) -> BoundReport:
    _check(n, d, c)
    return BoundReport(
        n=n, d=d, c=c,
        bound_A=bound_A(n, d),
        bound_B=bound_B(n, d),
        bound_main2=bound_main2(n, d, c) if c is not None else None,
        bound_final=bound_final(n, d),
        bound_artinian=bound_artinian(n, d),
        bound_p3=bound_p3(d),
        cc_sequence=tuple(cc_recursion(n, d)) if d >= 2 else (),
        main2_sequence=tuple(main2_recursion(n, d, c)) if c is not None else (),
    )


def bounds_grid(n_max=8, d_max=6):
    """BoundReports for 2 <= n <= n_max, 1 <= d <= d_max, 1 <= c < n."""
    out = []
    for n in range(2, n_max + 1):
        for d in range(1, d_max + 1):
            for c in range(1, n):
                out.append(eval_static_bounds(n, d, c))
    return out

"""Closed-form coefficient oracles computed straight from factorials.

Everything here is independent of the series engine: entries come from
factorials and recurrences only, so they can serve as ground truth when
validating series expansions.

Binomial convention used across the package::

    binom(a, b) = 0                      if b < 0
    binom(a, b) = 1                      if b == 0 (any integer a)
    binom(a, b) = a! / (b! (a-b)!)       if 0 <= b <= a
    binom(a, b) = 0                      otherwise (b > a >= 0, or a < 0 < b)

With this convention the out-of-range terms of every finite sum handled by
the checkers vanish instead of erroring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import DomainError

COLUMNS = ("A", "I", "J", "K")


def binom(a: int, b: int) -> int:
    if b < 0:
        return 0
    if b == 0:
        return 1
    if a < 0 or b > a:
        return 0
    return factorial(a) // (factorial(b) * factorial(a - b))


def recip_binom(n: int, m: int) -> Fraction:
    """1 / binom(n, m) inside the triangle, 0 outside (grid convention)."""
    if n < 0 or m < 0 or m > n:
        return Fraction(0)
    return Fraction(factorial(m) * factorial(n - m), factorial(n))


def exp_triangle(n: int, m: int) -> int:
    """m! (n-m)!, the exponential companion triangle of the reciprocals."""
    if not 0 <= m <= n:
        raise DomainError(f"exp_triangle needs 0 <= m <= n, got ({n}, {m})")
    return factorial(m) * factorial(n - m)


def exp_row_sum(n: int) -> int:
    """Row sums of the exponential triangle: sum_m m! (n-m)!."""
    return sum(exp_triangle(n, m) for m in range(n + 1))


def harmonic(n: int) -> Fraction:
    """H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0."""
    if n < 0:
        raise DomainError("harmonic numbers need n >= 0")
    return sum((Fraction(1, k) for k in range(1, n + 1)), Fraction(0))


def fibonacci(n: int) -> int:
    """F_0 = 0, F_1 = 1, F_{n+1} = F_n + F_{n-1}."""
    if n < 0:
        raise DomainError("fibonacci needs n >= 0")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@dataclass(frozen=True)
class TriangleVariant:
    """One cell of the 5 x 4 family: column in {A, I, J, K}, row in 0..4.

    Row meanings: 0 base triangle, 1 even rows, 2 even columns, 3 odd rows,
    4 odd columns.
    """

    column: str
    row: int

    def __post_init__(self):
        if self.column not in COLUMNS:
            raise DomainError(f"column must be one of {COLUMNS}")
        if self.row not in range(5):
            raise DomainError("row must be in 0..4")


def _entry_a(n: int, m: int) -> Fraction:
    return recip_binom(n, m)


def _entry_i(n: int, m: int) -> Fraction:
    # 1 / (n binom(n-1, m)), n >= 1, 0 <= m <= n-1
    if n < 1:
        return Fraction(0)
    return recip_binom(n - 1, m) / n


def _entry_j(n: int, m: int) -> Fraction:
    # 1 / (n m binom(n-1, m-1)), n >= 1, 1 <= m <= n
    if n < 1 or m < 1:
        return Fraction(0)
    return recip_binom(n - 1, m - 1) / (n * m)


def _entry_k(n: int, m: int) -> Fraction:
    # 1 / (m binom(n, m-1)), 1 <= m <= n+1
    if m < 1:
        return Fraction(0)
    return recip_binom(n, m - 1) / m


_BASE = {"A": _entry_a, "I": _entry_i, "J": _entry_j, "K": _entry_k}


def table_entry(v: TriangleVariant, n: int, m: int) -> Fraction:
    """Exact value of one family cell; 0 outside the cell's domain.

    Rows 1-4 are the literal parity formulas, e.g. row 1 of column J is
    1 / (2n m binom(2n-1, m-1)); they coincide with reselecting indices of
    the row-0 formulas, which the test suite checks independently.
    """
    base = _BASE[v.column]
    if v.row == 0:
        return base(n, m)
    if v.row == 1:  # even rows
        return base(2 * n, m)
    if v.row == 2:  # even columns
        return base(n, 2 * m)
    if v.row == 3:  # odd rows
        if n < 1:
            return Fraction(0)
        return base(2 * n - 1, m)
    # row 4: odd columns
    if m < 1:
        return Fraction(0)
    return base(n, 2 * m - 1)

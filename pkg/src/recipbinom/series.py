"""Exact truncated formal power series in one and two variables.

Coefficient arithmetic is ``fractions.Fraction`` end to end: no floats, no
rounding. Binary operations truncate to the smaller operand order, so every
result is well-defined without tracking error terms, and equality compares
coefficients up to the smaller of the two orders.

The bivariate type keeps a dense ``(order+1) x (order+1)`` grid.  Dense
storage (rather than triangular) matters because some of the triangles
handled downstream have nonzero entries at ``m = n + 1``.

Square-root substitutions never appear symbolically: extracting rows or
columns of a given parity is index reselection (:func:`parity_extract`), and
closed forms written in ``sqrt(x)`` are expanded in an auxiliary variable
``t`` with ``t**2 = x`` and collapsed by :func:`sqrt_expand`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence, Union

from .errors import (
    NonzeroConstantTerm,
    OddPartNonzero,
    OrderExceeded,
    ZeroConstantTerm,
)

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _frac(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


class Series1:
    """Univariate truncated series; ``coeffs[k]`` multiplies ``x**k``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [_frac(c) for c in coeffs]
        if order is None:
            if not cs:
                raise ValueError("empty coefficient list needs an explicit order")
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        if len(cs) < order + 1:
            cs.extend([_ZERO] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs = tuple(cs[: order + 1])

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "Series1":
        return cls([_ZERO], order)

    @classmethod
    def one(cls, order: int) -> "Series1":
        return cls([_ONE], order)

    @classmethod
    def x(cls, order: int) -> "Series1":
        return cls.monomial(order, 1)

    @classmethod
    def monomial(cls, order: int, k: int, c=1) -> "Series1":
        cs = [_ZERO] * (order + 1)
        if 0 <= k <= order:
            cs[k] = _frac(c)
        return cls(cs, order)

    @classmethod
    def from_terms(cls, order: int, terms: Mapping[int, object]) -> "Series1":
        cs = [_ZERO] * (order + 1)
        for k, c in terms.items():
            if 0 <= k <= order:
                cs[k] = _frac(c)
        return cls(cs, order)

    # -- basic queries -----------------------------------------------------

    def __getitem__(self, k: int) -> Fraction:
        if not 0 <= k <= self.order:
            raise OrderExceeded(f"coefficient x^{k} beyond order {self.order}")
        return self.coeffs[k]

    @property
    def constant_term(self) -> Fraction:
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series1):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    __hash__ = None  # mutable-equality semantics; not hashable

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:5])
        tail = ", ..." if self.order >= 5 else ""
        return f"Series1(order={self.order}, [{head}{tail}])"

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Series1):
            n = min(self.order, other.order)
            return Series1(
                [self.coeffs[k] + other.coeffs[k] for k in range(n + 1)], n
            )
        c = _frac(other)
        cs = list(self.coeffs)
        cs[0] += c
        return Series1(cs, self.order)

    __radd__ = __add__

    def __neg__(self):
        return Series1([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other if isinstance(other, Series1) else -_frac(other))

    def __rsub__(self, other):
        return (-self) + _frac(other)

    def __mul__(self, other):
        if not isinstance(other, Series1):
            c = _frac(other)
            return Series1([c * v for v in self.coeffs], self.order)
        n = min(self.order, other.order)
        out = [_ZERO] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if not a:
                continue
            for j in range(n - i + 1):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return Series1(out, n)

    __rmul__ = __mul__

    def reciprocal(self) -> "Series1":
        """Multiplicative inverse up to the truncation order."""
        a0 = self.coeffs[0]
        if a0 == 0:
            raise ZeroConstantTerm("cannot invert a series with zero constant term")
        inv0 = 1 / a0
        n = self.order
        out = [_ZERO] * (n + 1)
        out[0] = inv0
        items = [(i, c) for i, c in enumerate(self.coeffs) if i > 0 and c]
        for k in range(1, n + 1):
            s = _ZERO
            for i, c in items:
                if i > k:
                    break
                s += c * out[k - i]
            out[k] = -inv0 * s
        return Series1(out, n)

    # -- calculus and reindexing ---------------------------------------------

    def integrate(self) -> "Series1":
        """Antiderivative with zero constant; the top input coefficient drops."""
        out = [_ZERO] * (self.order + 1)
        for k in range(self.order):
            out[k + 1] = self.coeffs[k] / (k + 1)
        return Series1(out, self.order)

    def differentiate(self) -> "Series1":
        if self.order == 0:
            return Series1.zero(0)
        return Series1(
            [(k + 1) * self.coeffs[k + 1] for k in range(self.order)],
            self.order - 1,
        )

    def div_x(self, power: int = 1) -> "Series1":
        """Divide by x**power; the low coefficients must vanish."""
        for k in range(power):
            if self.coeffs[k] != 0:
                raise ValueError(f"series not divisible by x^{power}")
        return Series1(list(self.coeffs[power:]), self.order - power)

    def truncate(self, order: int) -> "Series1":
        if order > self.order:
            raise OrderExceeded("cannot extend a truncated series")
        return Series1(list(self.coeffs[: order + 1]), order)

    def evaluate(self, x: float) -> float:
        """Horner evaluation of the truncated polynomial in floats."""
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc


class Series2:
    """Bivariate truncated series; ``coeffs[n][m]`` multiplies ``x**n y**m``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[Sequence], order: int | None = None):
        rows = [[_frac(c) for c in row] for row in coeffs]
        if order is None:
            if not rows:
                raise ValueError("empty grid needs an explicit order")
            order = len(rows) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        n1 = order + 1
        grid = []
        for i in range(n1):
            row = rows[i] if i < len(rows) else []
            if len(row) < n1:
                row = row + [_ZERO] * (n1 - len(row))
            grid.append(tuple(row[:n1]))
        self.order = order
        self.coeffs = tuple(grid)

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "Series2":
        return cls([[]], order)

    @classmethod
    def one(cls, order: int) -> "Series2":
        return cls.monomial(order, 0, 0)

    @classmethod
    def monomial(cls, order: int, i: int, j: int, c=1) -> "Series2":
        grid = [[_ZERO] * (order + 1) for _ in range(order + 1)]
        if 0 <= i <= order and 0 <= j <= order:
            grid[i][j] = _frac(c)
        return cls(grid, order)

    @classmethod
    def from_terms(cls, order: int, terms: Mapping[tuple, object]) -> "Series2":
        grid = [[_ZERO] * (order + 1) for _ in range(order + 1)]
        for (i, j), c in terms.items():
            if 0 <= i <= order and 0 <= j <= order:
                grid[i][j] = _frac(c)
        return cls(grid, order)

    @classmethod
    def from_function(cls, order: int, fn: Callable[[int, int], object]) -> "Series2":
        return cls(
            [[fn(n, m) for m in range(order + 1)] for n in range(order + 1)], order
        )

    # -- basic queries -----------------------------------------------------

    def __getitem__(self, idx: tuple) -> Fraction:
        n, m = idx
        if not (0 <= n <= self.order and 0 <= m <= self.order):
            raise OrderExceeded(f"coefficient x^{n} y^{m} beyond order {self.order}")
        return self.coeffs[n][m]

    @property
    def constant_term(self) -> Fraction:
        return self.coeffs[0][0]

    def is_zero(self) -> bool:
        return all(c == 0 for row in self.coeffs for c in row)

    def nonzero_items(self):
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if c:
                    yield i, j, c

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series2):
            return NotImplemented
        n = min(self.order, other.order)
        return all(
            self.coeffs[i][: n + 1] == other.coeffs[i][: n + 1] for i in range(n + 1)
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"Series2(order={self.order})"

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Series2):
            n = min(self.order, other.order)
            return Series2(
                [
                    [self.coeffs[i][j] + other.coeffs[i][j] for j in range(n + 1)]
                    for i in range(n + 1)
                ],
                n,
            )
        c = _frac(other)
        grid = [list(row) for row in self.coeffs]
        grid[0][0] += c
        return Series2(grid, self.order)

    __radd__ = __add__

    def __neg__(self):
        return Series2([[-c for c in row] for row in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other if isinstance(other, Series2) else -_frac(other))

    def __rsub__(self, other):
        return (-self) + _frac(other)

    def __mul__(self, other):
        if not isinstance(other, Series2):
            c = _frac(other)
            return Series2(
                [[c * v for v in row] for row in self.coeffs], self.order
            )
        n = min(self.order, other.order)
        a_items = [(i, j, c) for i, j, c in self.nonzero_items() if i <= n and j <= n]
        b_items = [(i, j, c) for i, j, c in other.nonzero_items() if i <= n and j <= n]
        if len(a_items) > len(b_items):
            a_items, b_items = b_items, a_items
        # 2-D Cauchy product over the sparser operand's support
        out = [[_ZERO] * (n + 1) for _ in range(n + 1)]
        for i, j, a in a_items:
            for p, q, b in b_items:
                ni = i + p
                if ni > n:
                    continue
                mj = j + q
                if mj > n:
                    continue
                out[ni][mj] += a * b
        return Series2(out, n)

    __rmul__ = __mul__

    def reciprocal(self) -> "Series2":
        """Inverse series: ``self * result == 1`` up to the truncation order."""
        a0 = self.coeffs[0][0]
        if a0 == 0:
            raise ZeroConstantTerm("cannot invert a series with zero constant term")
        inv0 = 1 / a0
        n = self.order
        items = [(i, j, c) for i, j, c in self.nonzero_items() if (i, j) != (0, 0)]
        out = [[_ZERO] * (n + 1) for _ in range(n + 1)]
        out[0][0] = inv0
        for nn in range(n + 1):
            for mm in range(n + 1):
                if nn == 0 and mm == 0:
                    continue
                s = _ZERO
                for i, j, c in items:
                    if i <= nn and j <= mm:
                        s += c * out[nn - i][mm - j]
                out[nn][mm] = -inv0 * s
        return Series2(out, n)

    # -- calculus -----------------------------------------------------------

    def integrate_x(self) -> "Series2":
        """Antiderivative in x, zero constant of integration.

        The grid stays square at the same order, so the top source row
        (x-degree ``order``) has no destination and drops.
        """
        n = self.order
        out = [[_ZERO] * (n + 1) for _ in range(n + 1)]
        for i in range(n):
            src = self.coeffs[i]
            dst = out[i + 1]
            for j in range(n + 1):
                if src[j]:
                    dst[j] = src[j] / (i + 1)
        return Series2(out, n)

    def integrate_y(self) -> "Series2":
        n = self.order
        out = [[_ZERO] * (n + 1) for _ in range(n + 1)]
        for i in range(n + 1):
            src = self.coeffs[i]
            dst = out[i]
            for j in range(n):
                if src[j]:
                    dst[j + 1] = src[j] / (j + 1)
        return Series2(out, n)

    def differentiate_x(self) -> "Series2":
        if self.order == 0:
            return Series2.zero(0)
        n = self.order - 1
        return Series2(
            [
                [(i + 1) * self.coeffs[i + 1][j] for j in range(n + 1)]
                for i in range(n + 1)
            ],
            n,
        )

    def differentiate_y(self) -> "Series2":
        if self.order == 0:
            return Series2.zero(0)
        n = self.order - 1
        return Series2(
            [
                [(j + 1) * self.coeffs[i][j + 1] for j in range(n + 1)]
                for i in range(n + 1)
            ],
            n,
        )

    # -- substitution and reindexing ------------------------------------------

    def subst_y(self, v) -> Series1:
        """Substitute a constant for y: ``result[n] = sum_m c[n][m] v**m``."""
        v = _frac(v)
        out = []
        for row in self.coeffs:
            acc = _ZERO
            p = _ONE
            for c in row:
                if c:
                    acc += c * p
                p *= v
            out.append(acc)
        return Series1(out, self.order)

    def diagonal(self) -> Series1:
        """Substitute y = x: ``result[n] = sum_m c[n-m][m]``."""
        out = []
        for n in range(self.order + 1):
            acc = _ZERO
            for m in range(n + 1):
                acc += self.coeffs[n - m][m]
            out.append(acc)
        return Series1(out, self.order)

    def div_x(self, power: int = 1) -> "Series2":
        """Divide by x**power; the low x-rows must vanish."""
        for i in range(power):
            if any(c != 0 for c in self.coeffs[i]):
                raise ValueError(f"series not divisible by x^{power}")
        n = self.order - power
        if n < 0:
            raise ValueError("order too small for division")
        return Series2([list(self.coeffs[i + power][: n + 1]) for i in range(n + 1)], n)

    def truncate(self, order: int) -> "Series2":
        if order > self.order:
            raise OrderExceeded("cannot extend a truncated series")
        return Series2(
            [list(row[: order + 1]) for row in self.coeffs[: order + 1]], order
        )

    def evaluate(self, x: float, y: float) -> float:
        """Evaluate the truncated polynomial at floats (fixed summation order)."""
        acc = 0.0
        for row in reversed(self.coeffs):
            racc = 0.0
            for c in reversed(row):
                racc = racc * y + float(c)
            acc = acc * x + racc
        return acc


AnySeries = Union[Series1, Series2]


def compose_outer(outer: Sequence, inner: AnySeries) -> AnySeries:
    """Outer composition ``sum_k outer[k] * inner**k`` truncated to inner's order.

    ``inner`` must have zero constant term so that only finitely many powers
    reach any fixed coefficient.  Iteration stops early once a power of the
    inner series vanishes identically on the truncated grid.
    """
    if inner.constant_term != 0:
        raise NonzeroConstantTerm("inner series must have zero constant term")
    coeffs = [_frac(c) for c in outer]
    one = Series1.one(inner.order) if isinstance(inner, Series1) else Series2.one(inner.order)
    result = one * (coeffs[0] if coeffs else _ZERO)
    power = one
    for k in range(1, len(coeffs)):
        power = power * inner
        if power.is_zero():
            break
        if coeffs[k]:
            result = result + power * coeffs[k]
    return result


def parity_extract(t: Series2, axis: str, parity: str) -> Series2:
    """Select rows or columns of one parity, reindexed onto a smaller grid.

    rows/even:  result[n][m] = t[2n][m]
    rows/odd:   result[n][m] = t[2n-1][m]   (n >= 1; row 0 is zero)
    cols/even:  result[n][m] = t[n][2m]
    cols/odd:   result[n][m] = t[n][2m-1]   (m >= 1; column 0 is zero)

    The result order is ``floor(t.order / 2)``.
    """
    if axis not in ("rows", "cols"):
        raise ValueError("axis must be 'rows' or 'cols'")
    if parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd'")
    half = t.order // 2
    out = [[_ZERO] * (half + 1) for _ in range(half + 1)]
    for n in range(half + 1):
        for m in range(half + 1):
            if axis == "rows":
                src_n = 2 * n if parity == "even" else 2 * n - 1
                src_m = m
            else:
                src_n = n
                src_m = 2 * m if parity == "even" else 2 * m - 1
            if src_n < 0 or src_m < 0:
                continue
            out[n][m] = t.coeffs[src_n][src_m]
    return Series2(out, half)


def sqrt_expand(builder: Callable[[int], Series1], order: int) -> Series1:
    """Collapse an expansion in ``t = sqrt(x)`` to a series in ``x``.

    ``builder(2 * order)`` must return the exact t-series.  Every odd-index
    t-coefficient must vanish; a nonzero odd part signals a mis-derived
    closed form and raises :class:`OddPartNonzero`.
    """
    t_series = builder(2 * order)
    if t_series.order < 2 * order:
        raise OrderExceeded("builder returned too low an order")
    for k in range(1, 2 * order + 1, 2):
        if t_series.coeffs[k] != 0:
            raise OddPartNonzero(
                f"odd coefficient t^{k} = {t_series.coeffs[k]} is nonzero"
            )
    return Series1([t_series.coeffs[2 * n] for n in range(order + 1)], order)


# -- reference coefficient sequences and series ---------------------------------

def geometric_coeffs(count: int) -> list:
    """1, 1, 1, ... (count entries)."""
    return [_ONE] * count


def log1p_coeffs(count: int) -> list:
    """Coefficients of log(1 + u): 0, 1, -1/2, 1/3, ..."""
    return [_ZERO] + [Fraction((-1) ** (k - 1), k) for k in range(1, count)]


def dilog_coeffs(count: int) -> list:
    """Coefficients of Li2(u): 0, 1, 1/4, 1/9, ..."""
    return [_ZERO] + [Fraction(1, k * k) for k in range(1, count)]


def log_one_plus(inner: AnySeries) -> AnySeries:
    """log(1 + inner) for a zero-constant-term series."""
    limit = 2 * inner.order + 2
    return compose_outer(log1p_coeffs(limit), inner)


def dilog_of(inner: AnySeries) -> AnySeries:
    """Li2(inner) for a zero-constant-term series."""
    limit = 2 * inner.order + 2
    return compose_outer(dilog_coeffs(limit), inner)


def log1p_x(order: int) -> Series1:
    """log(1 + x) as a Series1."""
    return Series1(log1p_coeffs(order + 1), order)


def dilog_x(order: int) -> Series1:
    """Li2(x) as a Series1."""
    return Series1(dilog_coeffs(order + 1), order)


def harmonic_gf(order: int) -> Series1:
    """log(1/(1-x)) / (1-x), whose x^n coefficient is the harmonic number H_n."""
    geom = Series1(geometric_coeffs(order + 1), order)
    neg_log = -compose_outer(log1p_coeffs(order + 2), Series1.monomial(order, 1, -1))
    return geom * neg_log


def fibonacci_gf(order: int) -> Series1:
    """x / (1 - x - x^2), whose x^n coefficient is the Fibonacci number F_n."""
    den = Series1.from_terms(order, {0: 1, 1: -1, 2: -1})
    return Series1.monomial(order, 1) * den.reciprocal()

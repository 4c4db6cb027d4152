"""Riordan arrays and the Riordan-style reconstruction of the main triangle.

A Riordan array is the coefficient family ``R(n, k) = [x^n] F(x) G(x)^k``
for series F and G with G(0) = 0.  Applying the array to a sequence q
realizes ``[x^n] F(x) Q(G(x))``, which is the mechanism behind the
reconstruction of the reciprocal-binomial generating function from the
alternating-sum identity

    sum_{k=0..n} (-1)^k binom(n, k) m / (m + k)  =  1 / binom(n + m, n).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import OrderExceeded
from .reports import CheckReport, rat_str
from .series import Series1, Series2
from .triangles import binom, recip_binom


class RiordanArray:
    """Pair (f, g) of univariate series with g(0) = 0."""

    __slots__ = ("f", "g")

    def __init__(self, f: Series1, g: Series1):
        if g.constant_term != 0:
            raise ValueError("g must have zero constant term")
        self.f = f
        self.g = g

    @property
    def order(self) -> int:
        return min(self.f.order, self.g.order)

    def _powers(self, k_max: int):
        p = Series1.one(self.order)
        yield p
        for _ in range(k_max):
            p = p * self.g
            yield p


def r_coeff(r: RiordanArray, n: int, k: int) -> Fraction:
    """Exact coefficient R(n, k) = [x^n] f g^k."""
    if n > r.order or k > r.order:
        raise OrderExceeded(f"(n, k) = ({n}, {k}) beyond order {r.order}")
    p = Series1.one(r.order)
    for _ in range(k):
        p = p * r.g
    return (r.f * p)[n]


def riordan_apply(r: RiordanArray, q: Sequence) -> list:
    """b[n] = sum_k R(n, k) q_k, i.e. the coefficients of f * Q(g)."""
    order = r.order
    if len(q) < order + 1:
        raise ValueError("sequence too short for the array's order")
    q = [Fraction(v) for v in q[: order + 1]]
    b = [Fraction(0)] * (order + 1)
    for k, power in enumerate(r._powers(order)):
        fp = r.f * power
        qk = q[k]
        if qk == 0:
            continue
        for n in range(order + 1):
            b[n] += fp[n] * qk
    return b


def prudnikov_check(n: int, m: int) -> CheckReport:
    """Exact check of the alternating sum against 1 / binom(n+m, n)."""
    if m < 1:
        raise ValueError("the identity needs m >= 1")
    lhs = sum(
        (Fraction((-1) ** k * binom(n, k) * m, m + k) for k in range(n + 1)),
        Fraction(0),
    )
    rhs = recip_binom(n + m, n)
    if lhs == rhs:
        return CheckReport("prudnikov", f"(n, m) = ({n}, {m})", "pass")
    return CheckReport(
        "prudnikov", f"(n, m) = ({n}, {m})", "fail", first_failure=(n, m, lhs, rhs)
    )


def prudnikov_scan(max_total: int = 40) -> CheckReport:
    """Run the alternating-sum identity for every n >= 0, m >= 1, n+m <= max_total."""
    for total in range(1, max_total + 1):
        for m in range(1, total + 1):
            n = total - m
            rep = prudnikov_check(n, m)
            if not rep.passed:
                return CheckReport(
                    "prudnikov",
                    f"n + m <= {max_total}",
                    "fail",
                    first_failure=rep.first_failure,
                )
    return CheckReport("prudnikov", f"n + m <= {max_total}", "pass")


def f_coeff_series(order: int) -> Series2:
    """Grid of the kernel coefficients: c[n][k] = k / (n + k) for k >= 1."""
    if order < 1:
        raise ValueError("order must be >= 1")
    return Series2.from_function(
        order, lambda n, k: Fraction(k, n + k) if k >= 1 else Fraction(0)
    )


def reconstruct_A(order: int) -> Series2:
    """Rebuild the reciprocal-binomial grid through the Riordan composition.

    With F(w, u) = sum_{n>=0, k>=1} (k/(n+k)) w^n u^k and the zero-constant
    inner series G = xy/(xy - 1) = -(xy) - (xy)^2 - ..., the triangle's
    generating function is

        A(x, y) = (1 / (1 - xy)) * (1 + F(G, x)),

    where G is substituted for the first slot of F and x for the second.
    The substitution is realized by explicit power summation: G^n times the
    univariate slice sum_k (k/(n+k)) x^k, accumulated over n.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    f = f_coeff_series(order)
    xy = Series2.monomial(order, 1, 1)
    g = xy * (xy - 1).reciprocal()
    acc = Series2.zero(order)
    g_power = Series2.one(order)
    for n in range(order + 1):
        if n > 0:
            g_power = g_power * g
            if g_power.is_zero():
                break
        # second slot of F receives plain x, so the n-th slice is univariate
        slice_n = Series2.from_terms(
            order, {(k, 0): f.coeffs[n][k] for k in range(1, order + 1)}
        )
        acc = acc + g_power * slice_n
    return (1 - xy).reciprocal() * (1 + acc)

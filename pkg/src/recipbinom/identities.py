"""Exact identity checks: every equality is evaluated on two disjoint routes.

One side of each check comes from factorial oracles (direct finite sums over
triangle entries, harmonic/Fibonacci recurrences); the other side is either a
second summation formula or a series expansion from the closed forms.  All
comparisons are exact rational arithmetic; a failing check reports its first
counterexample instead of raising.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from . import closed_forms
from .reports import CheckReport
from .triangles import (
    TriangleVariant,
    binom,
    fibonacci,
    harmonic,
    recip_binom,
    table_entry,
)


# -- direct (oracle) sums for the sum generating functions --------------------

def _cell(column: str, row: int) -> Callable[[int, int], Fraction]:
    v = TriangleVariant(column, row)
    return lambda n, m: table_entry(v, n, m)


def _row_sum(cell) -> Callable[[int], Fraction]:
    # 2n+1 covers every family column: A-row entries reach m = 2n, K reaches n+1
    return lambda n: sum(
        (cell(n, m) for m in range(0, 2 * n + 2)), Fraction(0)
    )


def _diag_sum(cell) -> Callable[[int], Fraction]:
    return lambda n: sum((cell(n - m, m) for m in range(0, n + 1)), Fraction(0))


DIRECT_SUMS: dict[str, Callable[[int], Fraction]] = {
    "S1": _row_sum(_cell("A", 1)),
    "S2": _diag_sum(_cell("A", 1)),
    "S3": _row_sum(_cell("A", 2)),
    "S4": _diag_sum(_cell("A", 2)),
    "S5": _row_sum(_cell("A", 3)),
    "S6": _diag_sum(_cell("A", 3)),
    "S7": _row_sum(_cell("A", 4)),
    "S8": _diag_sum(_cell("A", 4)),
    "S9": _row_sum(_cell("I", 0)),
    "S10": _diag_sum(_cell("I", 0)),
    "S11": _row_sum(_cell("J", 0)),
    "S12": _diag_sum(_cell("J", 0)),
    "S13": _row_sum(_cell("K", 0)),
    "S14": _diag_sum(_cell("K", 0)),
    "A_diag": _diag_sum(_cell("A", 0)),
}


def direct_sum(form_id: str, n: int, a=1, b=1) -> Fraction:
    """Oracle value of the n-th coefficient of one sum generating function."""
    if form_id == "A_row":
        a = Fraction(a)
        b = Fraction(b)
        return sum(
            (recip_binom(n, m) * a ** (n - m) * b**m for m in range(n + 1)),
            Fraction(0),
        )
    return DIRECT_SUMS[form_id](n)


def check_sum_gf(form_id: str, max_n: int, a=1, b=1) -> CheckReport:
    """Expansion of a sum generating function vs the direct oracle sums."""
    expansion = closed_forms.expand(form_id, max_n, a=a, b=b)
    label = form_id if form_id != "A_row" else f"A_row(a={a},b={b})"
    for n in range(max_n + 1):
        lhs = expansion[n]
        rhs = direct_sum(form_id, n, a=a, b=b)
        if lhs != rhs:
            return CheckReport(
                label, f"0 <= n <= {max_n}", "fail", first_failure=(n, None, lhs, rhs)
            )
    note = closed_forms.PRINTED_FORM_NOTES.get(form_id)
    status = "pass_with_variant" if note else "pass"
    return CheckReport(label, f"0 <= n <= {max_n}", status, variant=note)


# -- the named identities -----------------------------------------------------

def check_iden7(max_n: int) -> CheckReport:
    """Mean of a reciprocal-coefficient row vs weighted harmonic numbers:

    (1/n) sum_{m=0}^{n-1} 1/binom(n-1, m)  =  H_n - sum_{k=1}^{n-1} H_{n-k}/2^k
    """
    for n in range(1, max_n + 1):
        lhs = sum(
            (recip_binom(n - 1, m) for m in range(n)), Fraction(0)
        ) / n
        rhs = harmonic(n) - sum(
            (harmonic(n - k) / Fraction(2**k) for k in range(1, n)), Fraction(0)
        )
        if lhs != rhs:
            return CheckReport(
                "iden7", f"1 <= n <= {max_n}", "fail", first_failure=(n, None, lhs, rhs)
            )
    return CheckReport("iden7", f"1 <= n <= {max_n}", "pass")


def check_iden6(max_n: int) -> CheckReport:
    """Diagonal sums of the x-integrated triangle vs Fibonacci numbers:

    sum_m 1/((n-m) binom(n-m-1, m))
        = sum_{i=1}^n F_i ((-1)^n + 2 (-1)^(i-1)) / (n-i+1)
    """
    for n in range(1, max_n + 1):
        lhs = Fraction(0)
        for m in range(n):
            if n - m >= 1:
                lhs += recip_binom(n - m - 1, m) / (n - m)
        rhs = sum(
            (
                Fraction(fibonacci(i) * ((-1) ** n + 2 * (-1) ** (i - 1)), n - i + 1)
                for i in range(1, n + 1)
            ),
            Fraction(0),
        )
        if lhs != rhs:
            return CheckReport(
                "iden6", f"1 <= n <= {max_n}", "fail", first_failure=(n, None, lhs, rhs)
            )
    return CheckReport("iden6", f"1 <= n <= {max_n}", "pass")


def check_iden5(max_n: int, variant: str = "shifted") -> CheckReport:
    """Reciprocal coefficients as alternating sums, two index conventions.

    The quoted form reads

        1/(n binom(n-1, m)) = sum_{k=0}^n (-1)^(n-k) binom(k,m) binom(m,n-k)/(k+1)

    and fails already at (n, m) = (1, 0).  The ``shifted`` variant replaces n
    by n-1 on the right (the expansion of log(1+u)/u carries one power of x
    less than the triangle it is matched against) and holds.
    """
    if variant not in ("printed", "shifted"):
        raise ValueError("variant must be 'printed' or 'shifted'")
    for n in range(1, max_n + 1):
        for m in range(n):
            lhs = recip_binom(n - 1, m) / n
            if variant == "printed":
                rhs = sum(
                    (
                        Fraction((-1) ** (n - k) * binom(k, m) * binom(m, n - k), k + 1)
                        for k in range(n + 1)
                    ),
                    Fraction(0),
                )
            else:
                rhs = sum(
                    (
                        Fraction(
                            (-1) ** (n - 1 - k) * binom(k, m) * binom(m, n - 1 - k),
                            k + 1,
                        )
                        for k in range(n)
                    ),
                    Fraction(0),
                )
            if lhs != rhs:
                return CheckReport(
                    "iden5",
                    f"0 <= m < n <= {max_n}",
                    "fail",
                    first_failure=(n, m, lhs, rhs),
                    variant=variant,
                )
    status = "pass" if variant == "shifted" else "pass_with_variant"
    return CheckReport("iden5", f"0 <= m < n <= {max_n}", status, variant=variant)


def check_iden_diff(max_n: int) -> CheckReport:
    """Difference of reciprocal coefficients as an alternating double sum:

    (1/m^2) (1/binom(n,m) - 1/binom(n-1,m))
        = sum_{k=1}^n (-1)^(n-k) binom(k,m) binom(m,n-k) / k^2

    At m = n the second left-hand term is outside the triangle and drops
    (the coefficient reading of (1-x) * J is finite there).
    """
    for n in range(1, max_n + 1):
        for m in range(1, n + 1):
            lhs = (recip_binom(n, m) - recip_binom(n - 1, m)) / (m * m)
            rhs = sum(
                (
                    Fraction((-1) ** (n - k) * binom(k, m) * binom(m, n - k), k * k)
                    for k in range(1, n + 1)
                ),
                Fraction(0),
            )
            if lhs != rhs:
                return CheckReport(
                    "iden_diff",
                    f"1 <= m <= n <= {max_n}",
                    "fail",
                    first_failure=(n, m, lhs, rhs),
                )
    return CheckReport("iden_diff", f"1 <= m <= n <= {max_n}", "pass")


def check_iden_pascal(max_n: int, neg_upper_zero: bool = False) -> CheckReport:
    """Binomial coefficients from sums of reciprocal ones:

    binom(n,m) = ((n+1)/(m+1)) sum_{k=0}^{n-m} binom(n-k-1, n-m-k) / binom(m+k+1, k)

    The k = n-m term contains binom(m-1, 0), which for m = 0 is the boundary
    cell binom(-1, 0).  Under the package convention binom(a, 0) = 1 for all
    integers a the identity reproduces the whole triangle; with
    ``neg_upper_zero=True`` (binom(a, 0) = 0 for a < 0) it fails first at
    (n, m) = (0, 0).
    """

    def nb(a: int, c: int) -> int:
        if neg_upper_zero and a < 0 and c == 0:
            return 0
        return binom(a, c)

    for n in range(max_n + 1):
        for m in range(n + 1):
            rhs = Fraction(n + 1, m + 1) * sum(
                (
                    Fraction(nb(n - k - 1, n - m - k)) * recip_binom(m + k + 1, k)
                    for k in range(n - m + 1)
                ),
                Fraction(0),
            )
            lhs = Fraction(binom(n, m))
            if lhs != rhs:
                return CheckReport(
                    "iden_pascal",
                    f"0 <= m <= n <= {max_n}",
                    "fail",
                    first_failure=(n, m, lhs, rhs),
                    variant="binom(-1,0)=0" if neg_upper_zero else "binom(-1,0)=1",
                )
    return CheckReport(
        "iden_pascal",
        f"0 <= m <= n <= {max_n}",
        "pass",
        variant="binom(-1,0)=0" if neg_upper_zero else "binom(-1,0)=1",
    )


def check_iden_li(max_n: int) -> CheckReport:
    """Dilogarithm-style partial sums against reciprocal-coefficient sums:

    (1/m^2) sum_{k=0}^n binom(n-k-1, n-m-k) / binom(k+m, m)
        = sum_{k=0}^{n-m} binom(k+m, m) / (k+m)^2

    Terms with k > n-m on the left vanish under the binomial convention
    (negative lower index), including the k = n boundary term.
    """
    for n in range(1, max_n + 1):
        for m in range(1, n + 1):
            lhs = sum(
                (
                    Fraction(binom(n - k - 1, n - m - k)) * recip_binom(k + m, m)
                    for k in range(n + 1)
                ),
                Fraction(0),
            ) / (m * m)
            rhs = sum(
                (
                    Fraction(binom(k + m, m), (k + m) ** 2)
                    for k in range(n - m + 1)
                ),
                Fraction(0),
            )
            if lhs != rhs:
                return CheckReport(
                    "iden_li",
                    f"1 <= m <= n <= {max_n}",
                    "fail",
                    first_failure=(n, m, lhs, rhs),
                )
    return CheckReport("iden_li", f"1 <= m <= n <= {max_n}", "pass")


IDENTITY_CHECKS = {
    "iden7": check_iden7,
    "iden6": check_iden6,
    "iden5": check_iden5,
    "iden_diff": check_iden_diff,
    "iden_pascal": check_iden_pascal,
    "iden_li": check_iden_li,
}

SUM_GF_IDS = tuple(DIRECT_SUMS) + ("A_row",)

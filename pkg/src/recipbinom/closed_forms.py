"""Exact expansion of every closed form in the generating-function family.

Each id maps to one expansion routine built from the series primitives; the
factorial oracles in :mod:`recipbinom.triangles` stay the ground truth the
expansions are judged against.  Grid ids (A, I, J, K and their parity
variants, plus the kernel grid F_xy) return :class:`Series2`; the sum
generating functions (A_row, A_diag, S1..S14) return :class:`Series1`.

The closed forms being expanded::

    A(x,y) = -y log((1-x)(1-xy)) / (1+y-xy)^2
             + x y^2 / ((1-xy)(1+y-xy)) + 1/(1-x)
    I(x,y) = log(1 - x(1+(1-x)y)) / ((x-1)y - 1)
    J(x,y) = (Li2(x(1+(1-x)y)) - Li2(x)) / (1-x)
    K(x,y) = dJ/dx
           = (1/(1-x)) [ log(1-x)/x
                         - (1+(1-2x)y) log(1 - x(1+(1-x)y)) / (x(1+(1-x)y)) ]
             + (Li2(x(1+(1-x)y)) - Li2(x)) / (1-x)^2

Parity ids are always index reselection of the parent grid, never radical
substitution.  A few of the quoted univariate sum formulas needed a
correction before they generate the verified sums; those expansions carry a
note in :data:`PRINTED_FORM_NOTES` and the checkers report them as
``pass_with_variant``.
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, OrderExceeded
from .reports import CheckReport
from .riordan import f_coeff_series
from .series import (
    Series1,
    Series2,
    dilog_of,
    log_one_plus,
    parity_extract,
    sqrt_expand,
)

DEFAULT_ORDER_CAP = 64
ENV_ORDER_CAP = "RECIPBINOM_MAX_ORDER"

GRID_IDS = (
    "A", "I", "J", "K",
    "A1", "A2", "A3", "A4",
    "I1", "I2", "I3", "I4",
    "J1", "J2", "J3", "J4",
    "K1", "K2", "K3", "K4",
    "F_xy",
)
SERIES_IDS = (
    "A_row", "A_diag",
    "S1", "S2", "S3", "S4", "S5", "S6", "S7",
    "S8", "S9", "S10", "S11", "S12", "S13", "S14",
)
ALL_IDS = GRID_IDS + SERIES_IDS

# (parent, axis, parity) for every parity-extracted grid id
_PARITY = {
    "A1": ("A", "rows", "even"),
    "A2": ("A", "cols", "even"),
    "A3": ("A", "rows", "odd"),
    "A4": ("A", "cols", "odd"),
    "I1": ("I", "rows", "even"),
    "I2": ("I", "cols", "even"),
    "I3": ("I", "rows", "odd"),
    "I4": ("I", "cols", "odd"),
    "J1": ("J", "rows", "even"),
    "J2": ("J", "cols", "even"),
    "J3": ("J", "rows", "odd"),
    "J4": ("J", "cols", "odd"),
    "K1": ("K", "rows", "even"),
    "K2": ("K", "cols", "even"),
    "K3": ("K", "rows", "odd"),
    "K4": ("K", "cols", "odd"),
}

# Quoted formulas that required a correction to reproduce the sums they are
# supposed to generate.  The expansion routines below use the corrected form;
# checkers attach these notes as the report variant.
PRINTED_FORM_NOTES = {
    "S7": "quoted form is twice the odd-column row-sum series; expansion uses half of it",
    "S9": "quoted denominator 2-x has the wrong sign; expansion uses 2 log(1-x)/(x-2)",
    "A_diag": "quoted log-term denominator (1-x-x^2)^2 corrected to (1+x-x^2)^2",
}


def order_cap() -> int:
    value = os.environ.get(ENV_ORDER_CAP)
    if value is None:
        return DEFAULT_ORDER_CAP
    return int(value)


def _check_order(order: int) -> None:
    if order < 1:
        raise DomainError("order must be >= 1")
    cap = order_cap()
    if order > cap:
        raise OrderExceeded(
            f"order {order} exceeds cap {cap} (set {ENV_ORDER_CAP} to raise it)"
        )


# -- bivariate building blocks ---------------------------------------------

def _u_poly(order: int) -> Series2:
    """x (1 + (1-x) y) = x + x y - x^2 y, the argument shared by I, J, K."""
    return Series2.from_terms(order, {(1, 0): 1, (1, 1): 1, (2, 1): -1})


@lru_cache(maxsize=None)
def _expand_A(order: int) -> Series2:
    log_part = log_one_plus(Series2.monomial(order, 1, 0, -1)) + log_one_plus(
        Series2.monomial(order, 1, 1, -1)
    )  # log(1-x) + log(1-xy)
    q = Series2.from_terms(order, {(0, 0): 1, (0, 1): 1, (1, 1): -1})  # 1+y-xy
    q_inv = q.reciprocal()
    one_minus_xy_inv = Series2.from_terms(order, {(0, 0): 1, (1, 1): -1}).reciprocal()
    y = Series2.monomial(order, 0, 1)
    term1 = -(y * log_part * q_inv * q_inv)
    term2 = Series2.monomial(order, 1, 2) * one_minus_xy_inv * q_inv
    term3 = Series2.from_terms(order, {(0, 0): 1, (1, 0): -1}).reciprocal()
    return term1 + term2 + term3


@lru_cache(maxsize=None)
def _expand_I(order: int) -> Series2:
    # log(1 - u) / ((x-1)y - 1); (x-1)y - 1 = xy - y - 1
    num = log_one_plus(-_u_poly(order))
    den = Series2.from_terms(order, {(0, 0): -1, (0, 1): -1, (1, 1): 1})
    return num * den.reciprocal()


@lru_cache(maxsize=None)
def _expand_J(order: int) -> Series2:
    u = _u_poly(order)
    num = dilog_of(u) - dilog_of(Series2.monomial(order, 1, 0))
    den_inv = Series2.from_terms(order, {(0, 0): 1, (1, 0): -1}).reciprocal()
    return num * den_inv


@lru_cache(maxsize=None)
def _expand_K(order: int) -> Series2:
    # work one order higher: both log terms carry a 1/x
    w = order + 1
    u = _u_poly(w)
    x = Series2.monomial(w, 1, 0)
    one_minus_x_inv = Series2.from_terms(w, {(0, 0): 1, (1, 0): -1}).reciprocal()
    log_x = log_one_plus(-x).div_x()  # log(1-x)/x, order w-1
    # (1 + (1-2x)y) log(1-u) / (x (1 + (1-x)y))
    prefac = Series2.from_terms(w, {(0, 0): 1, (0, 1): 1, (1, 1): -2})
    inner_den_inv = Series2.from_terms(
        w, {(0, 0): 1, (0, 1): 1, (1, 1): -1}
    ).reciprocal()
    log_u_over_x = (prefac * log_one_plus(-u)).div_x() * inner_den_inv.truncate(w - 1)
    bracket = (log_x - log_u_over_x) * one_minus_x_inv.truncate(w - 1)
    dilog_part = (dilog_of(u) - dilog_of(x)) * one_minus_x_inv * one_minus_x_inv
    return (bracket + dilog_part.truncate(w - 1)).truncate(order)


@lru_cache(maxsize=None)
def _expand_grid(form_id: str, order: int) -> Series2:
    if form_id == "A":
        return _expand_A(order)
    if form_id == "I":
        return _expand_I(order)
    if form_id == "J":
        return _expand_J(order)
    if form_id == "K":
        return _expand_K(order)
    if form_id == "F_xy":
        return f_coeff_series(order)
    parent, axis, parity = _PARITY[form_id]
    return parity_extract(_expand_grid(parent, 2 * order), axis, parity)


# -- univariate building blocks ---------------------------------------------

def _log1m(order: int, scale=1) -> Series1:
    """log(1 - scale*x) as a Series1."""
    return log_one_plus(Series1.monomial(order, 1, -Fraction(scale)))


def _poly(order: int, terms: dict) -> Series1:
    return Series1.from_terms(order, terms)


@lru_cache(maxsize=None)
def _expand_A_row(order: int, a: Fraction, b: Fraction) -> Series1:
    """Row sums weighted a^(n-m) b^m: the substitution A(a x, b/a).

    Expanded as -ab log((1-ax)(1-bx)) / (a+b-abx)^2
                + b^2 x / ((1-bx)(a+b-abx)) + 1/(1-ax).
    """
    if a == 0:
        raise DomainError("A_row needs a != 0")
    if a + b == 0:
        raise DomainError("A_row closed form needs a + b != 0")
    log_part = _log1m(order, a) + _log1m(order, b)
    den = _poly(order, {0: a + b, 1: -a * b}).reciprocal()
    term1 = -(a * b) * log_part * den * den
    term2 = (b * b) * Series1.monomial(order, 1) * _poly(
        order, {0: 1, 1: -b}
    ).reciprocal() * den
    term3 = _poly(order, {0: 1, 1: -a}).reciprocal()
    return term1 + term2 + term3


@lru_cache(maxsize=None)
def _expand_A_diag(order: int) -> Series1:
    # -x log((1-x)^2 (1+x)) / (1+x-x^2)^2 + (2x+1)/((1-x^2)(1+x-x^2))
    log_part = 2 * _log1m(order) + log_one_plus(Series1.monomial(order, 1))
    q_inv = _poly(order, {0: 1, 1: 1, 2: -1}).reciprocal()
    rational = _poly(order, {0: 1, 1: 2}) * (
        _poly(order, {0: 1, 2: -1}) * _poly(order, {0: 1, 1: 1, 2: -1})
    ).reciprocal()
    return -(Series1.monomial(order, 1) * log_part * q_inv * q_inv) + rational


def _s1_t_series(t_order: int) -> Series1:
    """Even-row row sums, written in t = sqrt(x):

    [4t log((1+t)/(1-t)) - (t^2+4) log(1-t^2)] / (t^2-4)^2
    + (2t^2+4) / ((t^2-4)(t^2-1))
    """
    log_ratio = log_one_plus(Series1.monomial(t_order, 1)) - _log1m(t_order)
    log_1mx = _log1m(t_order) + log_one_plus(Series1.monomial(t_order, 1))
    num = 4 * Series1.monomial(t_order, 1) * log_ratio - _poly(
        t_order, {0: 4, 2: 1}
    ) * log_1mx
    den_inv = _poly(t_order, {0: -4, 2: 1}).reciprocal()
    rational = _poly(t_order, {0: 4, 2: 2}) * den_inv * _poly(
        t_order, {0: -1, 2: 1}
    ).reciprocal()
    return num * den_inv * den_inv + rational


def _s5_t_series(t_order: int) -> Series1:
    """Odd-row row sums in t = sqrt(x):

    6t^2/(t^4-5t^2+4) + t log(1+t)/(2+t)^2 - t log(1-t)/(2-t)^2
    """
    t = Series1.monomial(t_order, 1)
    piece1 = 6 * t * t * _poly(t_order, {0: 4, 2: -5, 4: 1}).reciprocal()
    plus_inv = _poly(t_order, {0: 2, 1: 1}).reciprocal()
    minus_inv = _poly(t_order, {0: 2, 1: -1}).reciprocal()
    piece2 = t * log_one_plus(t) * plus_inv * plus_inv
    piece3 = t * _log1m(t_order) * minus_inv * minus_inv
    return piece1 + piece2 - piece3


@lru_cache(maxsize=None)
def _expand_S(form_id: str, order: int) -> Series1:
    if form_id == "S1":
        return sqrt_expand(_s1_t_series, order)
    if form_id == "S5":
        return sqrt_expand(_s5_t_series, order)
    if form_id in ("S2", "S4", "S6", "S8"):
        parent = {"S2": "A1", "S4": "A2", "S6": "A3", "S8": "A4"}[form_id]
        return _expand_grid(parent, order).diagonal()
    if form_id == "S3":
        # log(1-x^2)/(2x^2) + 3/((x-2)(x-1)(x+1)) - log(1-x)/(2-x)^2
        w = order + 2
        log_1mx2 = _log1m(w) + log_one_plus(Series1.monomial(w, 1))
        piece1 = log_1mx2.div_x(2) * Fraction(1, 2)
        den = _poly(w, {0: -2, 1: 1}) * _poly(w, {0: -1, 1: 1}) * _poly(w, {0: 1, 1: 1})
        piece2 = 3 * den.reciprocal()
        inv = _poly(w, {0: 2, 1: -1}).reciprocal()
        piece3 = _log1m(w) * inv * inv
        return (piece1 + piece2.truncate(w - 2) - piece3.truncate(w - 2)).truncate(order)
    if form_id == "S7":
        # half of: -log(1-x^2)/x^2 - 1/(x+1) + x/((1-x)(2-x)) - 2 log(1-x)/(2-x)^2
        w = order + 2
        log_1mx2 = _log1m(w) + log_one_plus(Series1.monomial(w, 1))
        piece1 = -log_1mx2.div_x(2)
        piece2 = _poly(w, {0: 1, 1: 1}).reciprocal()
        piece3 = Series1.monomial(w, 1) * (
            _poly(w, {0: 1, 1: -1}) * _poly(w, {0: 2, 1: -1})
        ).reciprocal()
        inv = _poly(w, {0: 2, 1: -1}).reciprocal()
        piece4 = 2 * _log1m(w) * inv * inv
        total = (
            piece1
            - piece2.truncate(w - 2)
            + piece3.truncate(w - 2)
            - piece4.truncate(w - 2)
        )
        return (total * Fraction(1, 2)).truncate(order)
    if form_id == "S9":
        # 2 log(1-x) / (x-2)
        return (2 * _log1m(order) * _poly(order, {0: -2, 1: 1}).reciprocal())
    if form_id == "S10":
        # log(1-x-x^2+x^3) / (x^2-x-1)
        num = log_one_plus(_poly(order, {1: -1, 2: -1, 3: 1}))
        return num * _poly(order, {0: -1, 1: -1, 2: 1}).reciprocal()
    if form_id == "S11":
        # (Li2(2x-x^2) - Li2(x)) / (1-x)
        num = dilog_of(_poly(order, {1: 2, 2: -1})) - dilog_of(Series1.monomial(order, 1))
        return num * _poly(order, {0: 1, 1: -1}).reciprocal()
    if form_id == "S12":
        # (Li2(x+x^2-x^3) - Li2(x)) / (1-x)
        num = dilog_of(_poly(order, {1: 1, 2: 1, 3: -1})) - dilog_of(
            Series1.monomial(order, 1)
        )
        return num * _poly(order, {0: 1, 1: -1}).reciprocal()
    if form_id == "S13":
        # (Li2(2x-x^2) - Li2(x))/(1-x)^2 + (3x-2) log(1-x) / ((x-2)(x-1)x)
        w = order + 1
        num = dilog_of(_poly(w, {1: 2, 2: -1})) - dilog_of(Series1.monomial(w, 1))
        inv = _poly(w, {0: 1, 1: -1}).reciprocal()
        piece1 = num * inv * inv
        piece2 = (_poly(w, {0: -2, 1: 3}) * _log1m(w)).div_x() * (
            _poly(w, {0: -2, 1: 1}) * _poly(w, {0: -1, 1: 1})
        ).reciprocal().truncate(w - 1)
        return (piece1.truncate(w - 1) + piece2).truncate(order)
    if form_id == "S14":
        # (Li2(x+x^2-x^3) - Li2(x))/(1-x)^2
        # + [(2x^2-x-1) log(1+x) + (3x^2-x-1) log(1-x)] / ((x-1) x (x^2-x-1))
        w = order + 1
        num = dilog_of(_poly(w, {1: 1, 2: 1, 3: -1})) - dilog_of(Series1.monomial(w, 1))
        inv = _poly(w, {0: 1, 1: -1}).reciprocal()
        piece1 = num * inv * inv
        log_num = _poly(w, {0: -1, 1: -1, 2: 2}) * log_one_plus(
            Series1.monomial(w, 1)
        ) + _poly(w, {0: -1, 1: -1, 2: 3}) * _log1m(w)
        piece2 = log_num.div_x() * (
            _poly(w, {0: -1, 1: 1}) * _poly(w, {0: -1, 1: -1, 2: 1})
        ).reciprocal().truncate(w - 1)
        return (piece1.truncate(w - 1) + piece2).truncate(order)
    raise DomainError(f"unknown series id {form_id!r}")


def expand(form_id: str, order: int, a=1, b=1):
    """Expand one id of the family to the requested truncation order.

    Grid ids return Series2, sum ids return Series1.  ``a`` and ``b`` only
    apply to ``A_row``.  Orders are capped (default 64; the environment
    variable named in :data:`ENV_ORDER_CAP` raises the cap).
    """
    _check_order(order)
    if form_id in GRID_IDS:
        return _expand_grid(form_id, order)
    if form_id == "A_row":
        return _expand_A_row(order, Fraction(a), Fraction(b))
    if form_id == "A_diag":
        return _expand_A_diag(order)
    if form_id in SERIES_IDS:
        return _expand_S(form_id, order)
    raise DomainError(f"unknown id {form_id!r}")


# -- numeric spot checks -----------------------------------------------------

def _f_xy_closed(x: float, y: float) -> float:
    """Kernel closed form: xy/(x-y)^2 log((1-y)/(1-x)) - y^2/((x-y)(1-y))."""
    import math

    if x == 0.0:
        return y / (1.0 - y)
    d = x - y
    return (x * y / d**2) * math.log((1.0 - y) / (1.0 - x)) - y * y / (d * (1.0 - y))


def f_xy_check(points, tol: float = 1e-9) -> CheckReport:
    """Compare the kernel's closed form against its truncated coefficient sum.

    Each point needs |x|, |y| < 1 and x != y.  The truncation order is chosen
    so the geometric tail bound stays below 1e-12.
    """
    import math

    for idx, (x, y) in enumerate(points):
        x = float(x)
        y = float(y)
        if not (abs(x) < 1.0 and abs(y) < 1.0):
            raise DomainError(f"point {idx}: needs |x| < 1 and |y| < 1")
        if x == y:
            raise DomainError(f"point {idx}: needs x != y")
        r = max(abs(x), abs(y))
        if r == 0.0:
            n_terms = 2
        else:
            margin = (1.0 - abs(x)) * (1.0 - abs(y))
            n_terms = int(math.log(1e-12 * margin / 2.0) / math.log(r)) + 1
            if n_terms > 4000:
                raise DomainError(f"point {idx}: too close to the boundary")
        partial = 0.0
        xn = 1.0
        for n in range(n_terms + 1):
            yk = y
            row = 0.0
            for k in range(1, n_terms + 1):
                row += k / (n + k) * yk
                yk *= y
            partial += xn * row
            xn *= x
        closed = _f_xy_closed(x, y)
        if abs(closed - partial) > tol:
            return CheckReport(
                "f_xy",
                f"{len(points)} sample points",
                "fail",
                first_failure=(idx, None, closed, partial),
            )
    return CheckReport("f_xy", f"{len(points)} sample points", "pass")


def _a1_display_value(x: float, y: float, corrected_sign: bool) -> float:
    """The explicit radical display quoted for A1, evaluated at 0 <= x < 1.

    The first bracket's log term is quoted with a leading plus; the
    definition requires a minus (``corrected_sign=True``).
    """
    import math

    t = math.sqrt(x)
    sign = -1.0 if corrected_sign else 1.0
    first = (
        sign * y * math.log((1 - t) * (1 - t * y)) / (-1 - y + t * y) ** 2
        + t * y * y / ((1 - t * y) * (1 + y - t * y))
        + 1 / (1 - t)
    )
    second = (
        -y * math.log((1 + t) * (1 + t * y)) / (1 + y + t * y) ** 2
        - t * y * y / ((1 + t * y) * (1 + y + t * y))
        + 1 / (1 + t)
    )
    return 0.5 * (first + second)


def a1_display_check(points=None, order: int = 32, tol: float = 1e-9) -> CheckReport:
    """Spot-check the quoted radical display for A1 against the parity grid.

    The display as quoted flips the sign of its first log term; this check
    records that the sign-corrected display matches the even-row grid while
    the quoted one does not.
    """
    if points is None:
        points = [(0.1, 0.3), (0.25, 0.5), (0.2, -0.4)]
    grid = _expand_grid("A1", order)
    quoted_ok = True
    corrected_ok = True
    first_bad = None
    for idx, (x, y) in enumerate(points):
        reference = grid.evaluate(float(x), float(y))
        quoted = _a1_display_value(float(x), float(y), corrected_sign=False)
        corrected = _a1_display_value(float(x), float(y), corrected_sign=True)
        if abs(quoted - reference) > tol:
            quoted_ok = False
            if first_bad is None:
                first_bad = (idx, None, quoted, reference)
        if abs(corrected - reference) > tol:
            corrected_ok = False
    rng = f"{len(points)} sample points, grid order {order}"
    if quoted_ok:
        return CheckReport("a1_display", rng, "pass")
    if corrected_ok:
        return CheckReport(
            "a1_display",
            rng,
            "pass_with_variant",
            first_failure=first_bad,
            variant="display matches only after flipping the sign of its first log term",
        )
    return CheckReport("a1_display", rng, "fail", first_failure=first_bad)

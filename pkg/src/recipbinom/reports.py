"""Result records shared by the checkers and the numeric evaluators."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


def rat_str(q) -> str:
    """Canonical text form of a rational: ``p/q``, or ``p`` when q == 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _side_str(v) -> str:
    if isinstance(v, (Fraction, int)):
        return rat_str(v)
    return repr(v)


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one identity or consistency check.

    ``status`` is ``pass``, ``fail`` or ``pass_with_variant``; the last one
    means the check holds only after the documented correction named in
    ``variant``.  A failing check always carries the first counterexample as
    ``(n, m, lhs, rhs)`` (``m`` is None for univariate checks); both sides
    are kept exact for symbolic checks.
    """

    id: str
    range: str
    status: str
    first_failure: tuple | None = None
    variant: str | None = None

    @property
    def passed(self) -> bool:
        return self.status != "fail"

    def to_dict(self) -> dict:
        ff = None
        if self.first_failure is not None:
            n, m, lhs, rhs = self.first_failure
            ff = {"n": n, "m": m, "lhs": _side_str(lhs), "rhs": _side_str(rhs)}
        return {
            "id": self.id,
            "range": self.range,
            "status": self.status,
            "first_failure": ff,
            "variant": self.variant,
        }


@dataclass(frozen=True)
class SumResult:
    """Numeric evaluation record for one infinite-sum check.

    ``tail_estimate`` is an explicit upper bound on the dropped remainder,
    derived from a stated majorant of the summand.  ``verdict`` is ``match``
    (``abs_diff <= tolerance``), ``mismatch``, or ``no_reference`` when no
    closed-form value is available.  ``alternates`` records additional
    reference values that were compared but are not the primary verdict.
    """

    name: str
    partial_sum: float
    terms_used: int
    tail_estimate: float
    closed_form_value: float | None = None
    abs_diff: float | None = None
    verdict: str = "no_reference"
    tolerance: float | None = None
    alternates: tuple = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "partial_sum": self.partial_sum,
            "terms_used": self.terms_used,
            "tail_estimate": self.tail_estimate,
            "closed_form_value": self.closed_form_value,
            "abs_diff": self.abs_diff,
            "verdict": self.verdict,
            "tolerance": self.tolerance,
            "alternates": [
                {
                    "label": label,
                    "value": value,
                    "abs_diff": diff,
                    "verdict": verdict,
                }
                for label, value, diff, verdict in self.alternates
            ],
        }


def compare_to_reference(
    name: str,
    partial: float,
    terms_used: int,
    tail: float,
    reference: float | None,
    tolerance: float | None,
    alternates: tuple = (),
) -> SumResult:
    """Assemble a SumResult, defaulting the tolerance to 10x the tail bound."""
    if reference is None:
        return SumResult(name, partial, terms_used, tail, alternates=alternates)
    tol = tolerance if tolerance is not None else 10.0 * tail
    diff = abs(partial - reference)
    return SumResult(
        name,
        partial,
        terms_used,
        tail,
        closed_form_value=reference,
        abs_diff=diff,
        verdict="match" if diff <= tol else "mismatch",
        tolerance=tol,
        alternates=alternates,
    )

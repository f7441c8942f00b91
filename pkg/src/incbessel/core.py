"""Shared value types: evaluation results, signed log-space numbers, errors."""

from __future__ import annotations

import math
from dataclasses import dataclass

_LN_DBL_MAX = 709.782712893384


class DomainError(ValueError):
    """An argument lies outside the domain of the requested operation."""


class ConvergenceError(RuntimeError):
    """An iterative scheme stopped before reaching its tolerance.

    The best result obtained so far is attached as ``result`` so callers
    can still inspect the value and its (too large) error estimate.
    """

    def __init__(self, message: str, result: "EvalResult | None" = None):
        super().__init__(message)
        self.result = result


@dataclass(frozen=True)
class EvalResult:
    """A computed value together with an error estimate and a work count.

    ``error_estimate`` is an upper estimate of the absolute error as
    reported by the producing algorithm (truncation thresholds, rounding
    models or nested-rule differences -- never a rigorous proof).
    ``work`` counts summed terms or integrand evaluations.
    """

    value: float
    error_estimate: float
    work: int


@dataclass(frozen=True)
class LogValue:
    """A real number stored as a sign and the natural log of its magnitude.

    ``sign == 0`` encodes exact zero and ``ln_magnitude`` is then ignored.
    This keeps quantities such as Gamma(1400) or gamma(1401, 50) usable in
    intermediate arithmetic where a plain float would overflow.
    """

    ln_magnitude: float
    sign: int

    @staticmethod
    def zero() -> "LogValue":
        return LogValue(-math.inf, 0)

    @staticmethod
    def from_float(v: float) -> "LogValue":
        if v == 0.0:
            return LogValue.zero()
        return LogValue(math.log(abs(v)), 1 if v > 0.0 else -1)

    def is_zero(self) -> bool:
        return self.sign == 0

    def __mul__(self, other: "LogValue") -> "LogValue":
        if self.sign == 0 or other.sign == 0:
            return LogValue.zero()
        return LogValue(self.ln_magnitude + other.ln_magnitude,
                        self.sign * other.sign)

    def __truediv__(self, other: "LogValue") -> "LogValue":
        if other.sign == 0:
            raise ZeroDivisionError("LogValue division by zero")
        if self.sign == 0:
            return LogValue.zero()
        return LogValue(self.ln_magnitude - other.ln_magnitude,
                        self.sign * other.sign)

    def __neg__(self) -> "LogValue":
        return LogValue(self.ln_magnitude, -self.sign)

    def to_float(self) -> float:
        """Materialize as a float; saturates to +-inf instead of raising."""
        if self.sign == 0:
            return 0.0
        if self.ln_magnitude > _LN_DBL_MAX:
            return math.inf if self.sign > 0 else -math.inf
        return self.sign * math.exp(self.ln_magnitude)

    def scaled(self, ln_scale: float) -> float:
        """sign * exp(ln_magnitude - ln_scale), for common-scale sums."""
        if self.sign == 0:
            return 0.0
        return self.sign * math.exp(self.ln_magnitude - ln_scale)


def log_add(a: float, b: float) -> float:
    """log(exp(a) + exp(b)) without overflow; accepts -inf."""
    if a == -math.inf:
        return b
    if b == -math.inf:
        return a
    hi, lo = (a, b) if a >= b else (b, a)
    return hi + math.log1p(math.exp(lo - hi))


def sum_ln_terms(ln_terms) -> tuple[float, float]:
    """Sum of exp(t) over ``ln_terms`` as (ln_scale, scaled_sum).

    The represented total is exp(ln_scale) * scaled_sum.  Summation of the
    rescaled terms is exactly rounded (math.fsum), so the result is as good
    as the individual ln terms allow.
    """
    terms = [t for t in ln_terms if t != -math.inf]
    if not terms:
        return -math.inf, 0.0
    m = max(terms)
    return m, math.fsum(math.exp(t - m) for t in terms)


def exp_saturating(ln_value: float) -> float:
    """exp() that saturates to inf above the double range."""
    if ln_value > _LN_DBL_MAX:
        return math.inf
    return math.exp(ln_value)

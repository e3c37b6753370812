"""Extended-real values with divergence certificates, and interval descriptions.

Support functions and Fenchel conjugates take the value +inf on whole
directions; silent float overflow is forbidden here, so every infinite
value carries a human-readable certificate naming the direction or ray
along which the objective grows without bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ValidationError

# Objective level beyond which a growing sequence is certified divergent.
DIVERGENCE_THRESHOLD = 1e6


@dataclass(frozen=True)
class ConjugateValue:
    """A finite real, or +inf with a certificate.

    ``point`` optionally records an attainment point (used by frontier
    tracing and allocation); it is only meaningful for finite values.
    """

    value: float
    certificate: str | None = None
    point: tuple[float, ...] | None = None

    def __post_init__(self) -> None:
        if math.isnan(self.value):
            raise ValidationError("conjugate value is NaN")
        if math.isinf(self.value):
            if self.value < 0:
                raise ValidationError("conjugate values are bounded below; -inf is not representable")
            if not self.certificate:
                raise ValidationError("infinite conjugate value requires a divergence certificate")

    @property
    def is_finite(self) -> bool:
        return math.isfinite(self.value)

    @classmethod
    def finite(cls, value: float, point: tuple[float, ...] | None = None) -> "ConjugateValue":
        return cls(float(value), None, point)

    @classmethod
    def infinite(cls, certificate: str) -> "ConjugateValue":
        return cls(math.inf, certificate, None)

    def __repr__(self) -> str:  # pragma: no cover - debug aid
        if self.is_finite:
            return f"ConjugateValue({self.value!r})"
        return f"ConjugateValue(+inf, certificate={self.certificate!r})"


@dataclass(frozen=True)
class Interval:
    """A closed interval of the extended real line, possibly a single point.

    Used to describe conjugate domains such as {-1} (cash-additive case),
    [a, b], or all of R.
    """

    lower: float
    upper: float

    def __post_init__(self) -> None:
        if math.isnan(self.lower) or math.isnan(self.upper):
            raise ValidationError("interval endpoints must not be NaN")
        if self.lower > self.upper:
            raise ValidationError(f"empty interval: [{self.lower}, {self.upper}]")

    def contains(self, v: float, tol: float = 0.0) -> bool:
        return (self.lower - tol) <= v <= (self.upper + tol)

    @classmethod
    def point(cls, a: float) -> "Interval":
        return cls(a, a)

    @classmethod
    def whole_line(cls) -> "Interval":
        return cls(-math.inf, math.inf)


def dom_conjugate_cash_additive() -> Interval:
    """Conjugate domain of the affine dominator t -> c - t: the point {-1}."""
    return Interval.point(-1.0)

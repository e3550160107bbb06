"""Numeric tolerance record shared by all floating-point checks.

A single Tolerance instance travels through a whole analysis run so that every
zero test, snap and residual check uses the same thresholds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = ["Tolerance", "DEFAULT_TOL", "snap_value"]


@dataclass(frozen=True)
class Tolerance:
    abs: float = 1e-9
    rel: float = 1e-9
    snap_denominator_bound: int = 10**4

    def __post_init__(self):
        if self.abs <= 0 or self.rel <= 0:
            raise ValueError("tolerances must be positive")

    def zero(self, scale: float = 0.0) -> float:
        """Threshold below which a value of the given ambient scale counts as zero."""
        return self.abs + self.rel * abs(scale)

    def close(self, a, b, scale: float | None = None) -> bool:
        if scale is None:
            scale = max(abs(a), abs(b))
        return abs(a - b) <= self.zero(scale)


DEFAULT_TOL = Tolerance()


def snap_value(value: float, tol: Tolerance = DEFAULT_TOL) -> int | Fraction | float:
    """Nearest integer, else nearest bounded-denominator rational, else the float back.

    An exact return type (int or Fraction) means the snap succeeded; a float
    return means the value is tagged non-rational at this tolerance.
    """
    x = float(value)
    n = round(x)
    if abs(x - n) <= tol.zero(x):
        return int(n)
    q = Fraction(x).limit_denominator(tol.snap_denominator_bound)
    if abs(x - float(q)) <= tol.zero(x):
        return q
    return x

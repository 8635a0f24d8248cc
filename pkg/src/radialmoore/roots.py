"""Roots of the cubic factor ``q(x) = x^3 - x^2 - (d-3)x - (d-1)``.

The transition matrix of the central-vertex recurrence has eigenvalue
``d - 1`` plus the three roots of ``q``.  Solving goes through the depressed
cubic ``t^3 + p t + r`` with ``x = t + 1/3``: Cardano's formula when the
discriminant is non-negative, the trigonometric form otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .recurrence import _require, cubic_factor, discriminant, polyval


class NotApplicableError(ValueError):
    pass


@dataclass(frozen=True)
class CubicRoots:
    d: int
    real_roots: tuple[float, ...]  # descending
    complex_pair: tuple[complex, complex] | None
    discriminant: Fraction

    def all_roots(self) -> list[complex]:
        out = [complex(x) for x in self.real_roots]
        if self.complex_pair:
            out.extend(self.complex_pair)
        return out

    @property
    def alpha(self) -> float:
        """The largest real root."""
        return self.real_roots[0]


def _cbrt(x: float) -> float:
    return math.copysign(abs(x) ** (1.0 / 3.0), x)


def _polish(d: int, x: float) -> float:
    coeffs = cubic_factor(d)
    deriv = [3, -2, -(d - 3)]
    for _ in range(3):
        fx = polyval(coeffs, x)
        dx = polyval(deriv, x)
        if dx == 0:
            break
        step = fx / dx
        x -= step
        if abs(step) <= 1e-16 * max(1.0, abs(x)):
            break
    return x


def cubic_roots(d: int) -> CubicRoots:
    _require(d)
    disc = discriminant(d)
    p = -(3 * d - 8) / 3.0
    r = -(36 * d - 52) / 27.0
    if disc >= 0:
        sq = math.sqrt(float(disc))
        t = _cbrt(-r / 2 + sq) + _cbrt(-r / 2 - sq)
        alpha = _polish(d, t + 1 / 3)
        # the other two roots have sum 1 - alpha and product (d - 1) / alpha
        s = 1 - alpha
        prod = (d - 1) / alpha
        half = s / 2
        im = math.sqrt(max(prod - half * half, 0.0))
        pair = (complex(half, -im), complex(half, im))
        return CubicRoots(d, (alpha,), pair, disc)
    m = 2 * math.sqrt(-p / 3)
    theta = math.acos(max(-1.0, min(1.0, 3 * r / (p * m)))) / 3
    roots = [m * math.cos(theta - 2 * math.pi * i / 3) + 1 / 3 for i in range(3)]
    roots = sorted((_polish(d, x) for x in roots), reverse=True)
    return CubicRoots(d, tuple(roots), None, disc)


def laguerre_interval(d: int) -> tuple[float, float]:
    """Interval containing every root when all three are real (d >= 17)."""
    if d < 17:
        raise NotApplicableError(f"d={d} has a complex pair; the interval needs d >= 17")
    w = 2 * math.sqrt(3 * d - 8)
    return (1 - w) / 3, (1 + w) / 3


def cauchy_bound_check(d: int, slack: float = 1e-9) -> bool:
    """Do the complex roots have modulus at most 2?  Only for 4 <= d <= 16."""
    _require(d)
    if d > 16:
        raise NotApplicableError(f"d={d} has three real roots; no complex pair")
    pair = cubic_roots(d).complex_pair
    return abs(pair[0]) <= 2 + slack and abs(pair[1]) <= 2 + slack


def asymptotic_ratios(d: int) -> tuple[float, float, float]:
    """``(alpha/sqrt(d), beta/(-sqrt(d)), gamma)`` with alpha largest, beta most negative."""
    if d < 17:
        raise NotApplicableError(f"d={d} has a complex pair")
    alpha, gamma, beta = cubic_roots(d).real_roots
    rd = math.sqrt(d)
    return alpha / rd, beta / -rd, gamma

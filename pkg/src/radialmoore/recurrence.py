"""Counting recurrence for central vs. non-central vertices in a Moore tree.

Vertices of the distance tree hanging from a central vertex are split by
kind at each level ``j``:

``a``   central, parent central
``a'``  central, parent non-central
``b``   non-central, parent central
``b'``  non-central, parent non-central

Maximising central vertices level by level gives the linear recurrence in
:func:`step`.  Everything here is exact integer arithmetic, except the
closed forms for degree 7, which are evaluated in high-precision complex
arithmetic and rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import mpmath

from .bounds import moore_bound


class OutOfDomainError(ValueError):
    pass


def _require(d: int, k: int | None = None) -> None:
    if d < 4:
        raise OutOfDomainError(f"the central-vertex recurrence needs d >= 4, got d={d}")
    if k is not None and k < 2:
        raise OutOfDomainError(f"need k >= 2, got k={k}")


@dataclass(frozen=True)
class RecurrenceState:
    a: int
    a_prime: int
    b: int
    b_prime: int

    @property
    def central(self) -> int:
        return self.a + self.a_prime

    @property
    def noncentral(self) -> int:
        return self.b + self.b_prime

    def total(self) -> int:
        return self.a + self.a_prime + self.b + self.b_prime

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.a_prime, self.b, self.b_prime)


def transition_matrix(d: int) -> list[list[int]]:
    return [
        [d - 1, d - 2, 0, 0],
        [0, 0, d - 3, d - 2],
        [0, 1, 0, 0],
        [0, 0, 2, 1],
    ]


def initial_state(d: int) -> RecurrenceState:
    _require(d)
    return RecurrenceState(d - 2, 0, 2, 0)


def step(d: int, s: RecurrenceState) -> RecurrenceState:
    return RecurrenceState(
        (d - 1) * s.a + (d - 2) * s.a_prime,
        (d - 3) * s.b + (d - 2) * s.b_prime,
        s.a_prime,
        2 * s.b + s.b_prime,
    )


def levels(d: int, k: int) -> Iterator[RecurrenceState]:
    """States for levels ``j = 1..k``."""
    s = initial_state(d)
    for _ in range(k):
        yield s
        s = step(d, s)


def central_sum(d: int, k: int) -> int:
    """``sum(a(j) + a'(j) for j in 1..k)``, the count without the root."""
    return sum(s.central for s in levels(d, k))


def central_upper_bound(d: int, k: int) -> int:
    """Upper bound on the number of central vertices of a radial Moore graph.

    Counts the root central vertex on top of the central vertices of levels
    ``1..k``; this is the quantity tabulated for ``d = 4..7``.
    """
    _require(d, k)
    return 1 + central_sum(d, k)


def central_upper_bound_k2(d: int) -> int:
    value = central_upper_bound(d, 2)
    assert value == moore_bound(d, 2) - 6, d
    return value


def noncentral_lower_bound(d: int, k: int) -> int:
    _require(d, k)
    return sum(s.noncentral for s in levels(d, k))


def bound_table(d_values, k_values) -> list[tuple[int, int, int, int]]:
    """Rows ``(d, k, central_upper_bound, moore_bound)``."""
    return [(d, k, central_upper_bound(d, k), moore_bound(d, k)) for k in k_values for d in d_values]


# -- degree 7 closed forms ---------------------------------------------

IMAG_TOLERANCE = 1e-6
_DPS = 60


class ClosedFormError(ArithmeticError):
    pass


def _q(num: int, den: int = 1) -> mpmath.mpf:
    return mpmath.mpf(num) / den


def _c(re_num: int, im_num: int, den: int) -> mpmath.mpc:
    return mpmath.mpc(_q(re_num, den), _q(im_num, den))


def _real(z: mpmath.mpc) -> int:
    if abs(z.imag) >= IMAG_TOLERANCE:
        raise ClosedFormError(f"imaginary residue {mpmath.nstr(z.imag, 5)} exceeds {IMAG_TOLERANCE}")
    return int(mpmath.nint(z.real))


def d7_level_closed_form(j: int) -> tuple[mpmath.mpc, ...]:
    """Level counts ``(a, a', b, b')`` for d = 7 from the eigen-decomposition."""
    with mpmath.workdps(_DPS):
        r1 = mpmath.mpc(-1, 1) ** (j - 1)  # (i - 1)^(j-1)
        r2 = mpmath.mpc(-1, -1) ** j  # (-i - 1)^j
        p6 = mpmath.mpf(6) ** (j - 1)
        p3 = mpmath.mpf(3) ** (j - 1)
        a = 7 * p6 - _q(60, 17) * p3 - _c(-13, 1, 17) * r1 + _c(-7, 6, 17) * r2
        ap = _q(36, 17) * p3 + _c(-18, 4, 17) * r1 - _c(-11, 7, 17) * r2
        b = _q(12, 17) * p3 + _c(11, 7, 17) * r1 + _c(-2, 9, 17) * r2
        bp = _q(12, 17) * p3 - _c(6, 10, 17) * r1 - _c(2, 8, 17) * r2
        return a, ap, b, bp


def d7_central_closed_form(k: int) -> mpmath.mpc:
    with mpmath.workdps(_DPS):
        r1 = mpmath.mpc(-1, 1) ** k
        r2 = mpmath.mpc(-1, -1) ** k
        return (
            _q(7, 5) * mpmath.mpf(6) ** k
            - _q(12, 17) * mpmath.mpf(3) ** k
            - _c(-13, 1, 85) * r1
            + _c(13, 1, 85) * r2
            - 1
        )


def d7_noncentral_closed_form(k: int) -> mpmath.mpc:
    with mpmath.workdps(_DPS):
        r1 = mpmath.mpc(-1, 1) ** k
        r2 = mpmath.mpc(-1, -1) ** k
        return _q(12, 17) * mpmath.mpf(3) ** k + _c(-13, 1, 85) * r1 - _c(13, 1, 85) * r2 - _q(2, 5)


def closed_form_d7(k: int) -> tuple[int, int]:
    """``(central, noncentral)`` from the degree-7 closed forms, rounded.

    The central value counts levels ``1..k`` only, i.e. it equals
    ``central_upper_bound(7, k) - 1``.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    with mpmath.workdps(_DPS):
        return _real(d7_central_closed_form(k)), _real(d7_noncentral_closed_form(k))


def d7_levels_closed_form(j: int) -> tuple[int, int, int, int]:
    with mpmath.workdps(_DPS):
        return tuple(_real(z) for z in d7_level_closed_form(j))


# -- characteristic polynomial -------------------------------------------


def cubic_factor(d: int) -> list[int]:
    """Coefficients (highest first) of ``x^3 - x^2 - (d-3)x - (d-1)``."""
    _require(d)
    return [1, -1, -(d - 3), -(d - 1)]


def characteristic_polynomial(d: int) -> list[int]:
    """Expanded ``(x - (d-1)) * cubic_factor(d)``, highest degree first."""
    c = cubic_factor(d)
    lin = [1, -(d - 1)]
    out = [0] * 5
    for i, x in enumerate(lin):
        for j, y in enumerate(c):
            out[i + j] += x * y
    return out


def discriminant(d: int) -> Fraction:
    """Cardano discriminant ``(q/2)^2 + (p/3)^3`` of the depressed cubic factor.

    Positive means one real root and a complex pair; negative means three
    distinct real roots.
    """
    _require(d)
    return Fraction(-(d**3 - 20 * d**2 + 56 * d - 44), 27)


def polyval(coeffs: list[int], x):
    acc = 0
    for c in coeffs:
        acc = acc * x + c
    return acc

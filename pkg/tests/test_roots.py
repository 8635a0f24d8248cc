import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from radialmoore.roots import (
    NotApplicableError,
    asymptotic_ratios,
    cauchy_bound_check,
    cubic_roots,
    laguerre_interval,
)


def numpy_roots(d):
    return sorted(np.roots([1, -1, -(d - 3), -(d - 1)]), key=lambda z: (z.real, z.imag))


def test_d7_roots():
    cr = cubic_roots(7)
    assert cr.real_roots == pytest.approx((3.0,), abs=1e-12)
    assert cr.alpha == pytest.approx(3.0)
    pair = sorted(cr.complex_pair, key=lambda z: z.imag)
    assert abs(pair[0] - complex(-1, -1)) < 1e-9
    assert abs(pair[1] - complex(-1, 1)) < 1e-9


def test_d17_roots():
    cr = cubic_roots(17)
    assert cr.complex_pair is None
    # q(x) = (x + 2)(x^2 - 3x - 8) at d = 17
    a, g, b = cr.real_roots
    assert a == pytest.approx((3 + math.sqrt(41)) / 2, abs=1e-12)
    assert g == pytest.approx((3 - math.sqrt(41)) / 2, abs=1e-12)
    assert b == pytest.approx(-2.0, abs=1e-12)


@pytest.mark.parametrize("d", range(4, 201))
def test_roots_match_numpy(d):
    ours = sorted(cubic_roots(d).all_roots(), key=lambda z: (z.real, z.imag))
    for x, y in zip(ours, numpy_roots(d)):
        assert abs(complex(x) - y) < 1e-7


@pytest.mark.parametrize("d", range(4, 201))
def test_vieta(d):
    r = [complex(z) for z in cubic_roots(d).all_roots()]
    assert len(r) == 3
    assert abs(sum(r) - 1) < 1e-8
    assert abs(r[0] * r[1] + r[0] * r[2] + r[1] * r[2] + (d - 3)) < 1e-8
    assert abs(r[0] * r[1] * r[2] - (d - 1)) < 1e-8


@given(st.integers(4, 5000))
def test_real_root_count_follows_discriminant(d):
    cr = cubic_roots(d)
    if cr.discriminant > 0:
        assert len(cr.real_roots) == 1 and cr.complex_pair is not None
        assert cr.complex_pair[0] == cr.complex_pair[1].conjugate()
    else:
        assert len(cr.real_roots) == 3 and cr.complex_pair is None
        assert list(cr.real_roots) == sorted(cr.real_roots, reverse=True)


@pytest.mark.parametrize("d", range(4, 17))
def test_cauchy(d):
    assert cauchy_bound_check(d)
    assert max(abs(z) for z in cubic_roots(d).complex_pair) <= 2


@pytest.mark.parametrize("d", range(17, 201))
def test_laguerre_contains_roots(d):
    lo, hi = laguerre_interval(d)
    w = 2 * math.sqrt(3 * d - 8)
    assert (lo, hi) == pytest.approx(((1 - w) / 3, (1 + w) / 3))
    assert all(lo <= x <= hi for x in cubic_roots(d).real_roots)


def test_asymptotics():
    a, b, g = asymptotic_ratios(10**6)
    assert a == pytest.approx(1, rel=0.01)
    assert b == pytest.approx(1, rel=0.01)
    assert g == pytest.approx(-1, rel=0.01)


def test_not_applicable():
    with pytest.raises(NotApplicableError):
        laguerre_interval(16)
    with pytest.raises(NotApplicableError):
        cauchy_bound_check(17)
    with pytest.raises(NotApplicableError):
        asymptotic_ratios(10)


def test_residuals_small():
    for d in (4, 16, 17, 1000, 10**6):
        for z in cubic_roots(d).all_roots():
            z = complex(z)
            val = z**3 - z**2 - (d - 3) * z - (d - 1)
            assert abs(val) <= 1e-9 * max(1.0, abs(z) ** 3)
    assert cmath.isclose(complex(cubic_roots(7).all_roots()[0]), 3)

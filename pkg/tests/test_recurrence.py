import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from radialmoore.bounds import moore_bound
from radialmoore.recurrence import (
    ClosedFormError,
    OutOfDomainError,
    bound_table,
    central_sum,
    central_upper_bound,
    central_upper_bound_k2,
    characteristic_polynomial,
    closed_form_d7,
    cubic_factor,
    d7_levels_closed_form,
    discriminant,
    initial_state,
    levels,
    noncentral_lower_bound,
    polyval,
    step,
    transition_matrix,
)

TABLE = {
    (4, 3): (41, 53), (5, 3): (92, 106), (6, 3): (171, 187), (7, 3): (284, 302),
    (4, 4): (133, 161), (5, 4): (388, 426), (6, 4): (889, 937), (7, 4): (1756, 1814),
    (4, 5): (423, 485), (5, 5): (1612, 1706), (6, 5): (4557, 4687), (7, 5): (10716, 10886),
    (4, 6): (1327, 1457), (5, 6): (6596, 6826), (6, 6): (23079, 23437), (7, 6): (64804, 65318),
    (4, 7): (4093, 4373), (5, 7): (26732, 27306), (6, 7): (116195, 117187), (7, 7): (390364, 391910),
}


def test_table_values():
    rows = bound_table(range(4, 8), range(3, 8))
    assert {(d, k): (b, m) for d, k, b, m in rows} == TABLE


@given(st.integers(4, 60), st.integers(1, 25))
def test_level_sizes_fill_moore_tree(d, j):
    s = list(levels(d, j))[-1]
    assert s.total() == d * (d - 1) ** (j - 1)
    assert min(s.as_tuple()) >= 0


@given(st.integers(4, 60), st.integers(2, 20))
def test_central_plus_noncentral_is_moore_bound(d, k):
    assert central_upper_bound(d, k) + noncentral_lower_bound(d, k) == moore_bound(d, k)
    assert central_upper_bound(d, k) == 1 + central_sum(d, k)


@given(st.integers(4, 200))
def test_k2_identity(d):
    assert central_upper_bound_k2(d) == moore_bound(d, 2) - 6


@given(st.integers(4, 30), st.integers(1, 12))
def test_step_is_matrix_power(d, j):
    m = sympy.Matrix(transition_matrix(d))
    v = sympy.Matrix(initial_state(d).as_tuple())
    s = list(levels(d, j))[-1]
    assert tuple(int(x) for x in m ** (j - 1) * v) == s.as_tuple()


@pytest.mark.parametrize("d", range(4, 20))
def test_characteristic_polynomial_matches_sympy(d):
    x = sympy.symbols("x")
    expected = sympy.Matrix(transition_matrix(d)).charpoly(x).all_coeffs()
    assert [int(c) for c in expected] == characteristic_polynomial(d)
    assert polyval(characteristic_polynomial(d), d - 1) == 0
    assert polyval(cubic_factor(d), 0) == -(d - 1)


def test_d7_spectrum():
    x = sympy.symbols("x")
    roots = sympy.roots(sympy.Poly(characteristic_polynomial(7), x))
    assert set(roots) == {6, 3, -1 + sympy.I, -1 - sympy.I}


@given(st.integers(4, 300))
def test_discriminant_is_cardano(d):
    # sympy's discriminant is -108 times (q/2)^2 + (p/3)^3 for a monic cubic
    x = sympy.symbols("x")
    disc = sympy.discriminant(sympy.Poly(cubic_factor(d), x))
    assert disc == -108 * sympy.Rational(discriminant(d).numerator, discriminant(d).denominator)


def test_discriminant_d7():
    from fractions import Fraction

    assert discriminant(7) == Fraction(289, 27)
    assert discriminant(16) > 0 > discriminant(17)


@pytest.mark.parametrize("k", range(1, 21))
def test_d7_closed_forms(k):
    central, noncentral = closed_form_d7(k)
    assert central == central_sum(7, k)
    assert noncentral == sum(s.noncentral for s in levels(7, k))


@pytest.mark.parametrize("j", range(1, 21))
def test_d7_level_closed_forms(j):
    assert d7_levels_closed_form(j) == list(levels(7, j))[-1].as_tuple()


def test_d7_k3_values():
    # the tabulated 284 counts the root on top of the level sum
    assert closed_form_d7(3) == (283, 18)
    assert closed_form_d7(3)[1] == moore_bound(7, 3) - 284


def test_domain_errors():
    with pytest.raises(OutOfDomainError):
        central_upper_bound(3, 3)
    with pytest.raises(OutOfDomainError):
        central_upper_bound(5, 1)
    with pytest.raises(OutOfDomainError):
        initial_state(2)
    with pytest.raises(ValueError):
        closed_form_d7(0)
    assert issubclass(ClosedFormError, ArithmeticError)


def test_step_is_linear():
    s = initial_state(9)
    assert step(9, s).as_tuple() == (8 * 7, 6 * 2, 0, 4)

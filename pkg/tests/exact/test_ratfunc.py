from fractions import Fraction

import hypothesis
import mpmath
import pytest
from hypothesis import strategies as st

from src.errors import HigherOrderPole, PoleAtOrigin, PoleEvaluation, ZeroDenominator
from src.exact.polynomial import Poly
from src.exact.ratfunc import RatFunc

nonzero = st.lists(st.integers(-9, 9), min_size=1, max_size=4).filter(lambda c: any(c))


def test_canonical_form():
    f = RatFunc(Poly([-1, 0, 1]), Poly([-1, 1]))
    assert f.num == Poly([1, 1])
    assert f.den == Poly.one()
    assert f == Poly([1, 1])

    g = RatFunc(1, Poly([0, 2]))
    assert g.den == Poly([0, 1])
    assert g.num == Poly([Fraction(1, 2)])


def test_zero_denominator():
    with pytest.raises(ZeroDenominator):
        RatFunc(1, 0)
    with pytest.raises(ZeroDenominator):
        RatFunc(1) / RatFunc(0)


def test_geometric_series():
    f = RatFunc.geometric(2)
    assert f.evaluate(Fraction(1, 4)) == 2
    assert f.taylor_coefficients(4) == [1, 2, 4, 8]
    with pytest.raises(PoleEvaluation):
        RatFunc.geometric(1).evaluate(1)


def test_monomial_with_negative_exponent():
    f = RatFunc.monomial(-1, 3)
    assert f * RatFunc.monomial(1) == 3
    with pytest.raises(PoleAtOrigin):
        f.taylor_coefficients(2)


def test_residues_and_pole_orders():
    f = RatFunc.geometric(1) * RatFunc.geometric(4)
    assert f.residue_simple(1) == Fraction(1, 3)
    assert f.residue_simple(2) == 0
    double = RatFunc.geometric(1) ** 2
    assert double.pole_order(1) == 2
    with pytest.raises(HigherOrderPole):
        double.residue_simple(1)


def test_scale_substitute():
    f = RatFunc.geometric(2)
    assert f.scale_substitute(3) == RatFunc.geometric(6)
    assert f.scale_substitute(0) == 1


def test_invert_substitute_of_simple_function():
    # 1/(1-T) at T -> 1/(2T) is 2T/(2T-1)
    f = RatFunc.geometric(1).invert_substitute(2)
    assert f == RatFunc(Poly([0, 2]), Poly([-1, 2]))


def test_evaluate_mp_matches_exact_value():
    f = RatFunc(Poly([1, 0, 2]), Poly([1, -3]))
    with mpmath.workprec(128):
        value = f.evaluate_mp(mpmath.mpf(1) / 5)
        assert abs(value - mpmath.mpf(27) / 10) < mpmath.mpf(10) ** -30


@hypothesis.given(nonzero, nonzero, st.integers(1, 9))
def test_invert_substitute_is_an_involution(num, den, q_big):
    f = RatFunc(Poly(num), Poly(den))
    assert f.invert_substitute(q_big).invert_substitute(q_big) == f


@hypothesis.given(nonzero, nonzero, nonzero, nonzero)
def test_field_operations(a, b, c, d):
    f = RatFunc(Poly(a), Poly(b))
    g = RatFunc(Poly(c), Poly(d))
    assert (f + g) - g == f
    assert (f * g) / g == f
    assert f * g == g * f

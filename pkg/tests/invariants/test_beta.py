from fractions import Fraction

import pytest

from src.errors import NonIntegralExponent
from src.highrank.compositions import Composition
from src.invariants.beta import (
    alpha_zero_closed,
    beta_routes,
    beta_total,
    beta_zagier,
    zagier_exponent,
)


@pytest.mark.parametrize(("n", "expected"), [(2, Fraction(6)), (3, Fraction(66, 7))])
def test_routes_agree_on_e0(e0, n, expected):
    routes = beta_routes(e0, n)
    assert routes.agree
    assert routes.zagier == expected


@pytest.mark.parametrize("n", [1, 2, 3])
def test_routes_agree_on_c5(c5, n):
    assert beta_routes(c5, n).agree


def test_beta_of_degree_one(e0):
    # (2,) weighs ν̂_2 = 9 and (1,1) weighs q * (-3)
    assert beta_zagier(e0, 2, 1) == 3


def test_beta_depends_on_degree_mod_n(e0):
    assert beta_zagier(e0, 2, 3) == beta_zagier(e0, 2, 1)
    assert beta_zagier(e0, 3, 6) == beta_zagier(e0, 3, 0)


def test_total_mass(e0, c5):
    assert beta_total(e0, 2) == 9
    assert beta_total(c5, 2) == 2 * Fraction(325, 6)


def test_alpha_zero_closed_form(e0):
    assert alpha_zero_closed(e0, 1) == 1
    assert alpha_zero_closed(e0, 3) == 6
    assert alpha_zero_closed(e0, 4) == Fraction(66, 7)


def test_exponent_must_be_integral():
    assert zagier_exponent(Composition((1, 2)), 3, 1) == 1
    with pytest.raises(NonIntegralExponent):
        zagier_exponent(Composition((1, 1)), 3, 1)

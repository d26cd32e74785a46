from fractions import Fraction

import pytest

from src.errors import StructureViolation
from src.exact.polynomial import Poly
from src.exact.ratfunc import RatFunc
from src.highrank.bundle import alpha_at, bundle, bundle_from_zeta, pole_report


def test_e0_rank_two(e0):
    b = bundle(e0, 2)
    assert b.numerator == Poly([3, 3, 12])
    assert b.alpha == (3,)
    assert b.beta0 == 6
    assert b.big_q == 4
    assert b.constant == 1


def test_e0_rank_three(e0):
    b = bundle(e0, 3)
    assert b.numerator == Poly([6, 12, 48])
    assert b.alpha == (6,)
    assert b.beta0 == Fraction(66, 7)


def test_c5_rank_two(c5):
    b = bundle(c5, 2)
    assert b.numerator == Poly([10, 15, 30, 60, 160])
    assert b.alpha == (10, 65)
    assert b.beta0 == Fraction(275, 3)
    assert b.constant == 2


def test_c5_rank_three(c5):
    b = bundle(c5, 3)
    assert b.alpha == (Fraction(1100, 3), 4125)
    assert b.beta0 == Fraction(100375, 21)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_pole_structure(c5, n):
    b = bundle(c5, n)
    poles = pole_report(b.zhat, b.big_q)
    assert poles.ok
    assert poles.order_at_zero == 1
    assert poles.residue_at_one == b.beta0
    assert poles.beta_from_inverse_q == b.beta0


def test_alpha_beyond_the_stored_range(e0):
    b = bundle(e0, 2)
    assert alpha_at(b, -1) == 0
    assert alpha_at(b, 0) == 3
    # vanishing range: α(2) = β(0)(Q - 1)
    assert alpha_at(b, 1) == 18


def test_malformed_zeta_is_rejected(e0):
    with pytest.raises(StructureViolation):
        bundle_from_zeta(e0, 2, RatFunc.geometric(2))

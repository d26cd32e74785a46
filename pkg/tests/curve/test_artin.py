from fractions import Fraction

import pytest

from src.curve.artin import artin_zeta, special_values, zeta_denominator
from src.exact.polynomial import Poly


def test_special_values_of_e0(e0):
    sv = special_values(e0, 3)
    assert sv.zeta_at == (3, 3, Fraction(11, 7))
    assert sv.nu_hat == (3, 9, Fraction(99, 7))
    assert sv.nu(0) == 1
    with pytest.raises(IndexError):
        sv.zeta(4)


def test_special_values_of_c5(c5):
    sv = special_values(c5, 2)
    assert sv.zeta(2) == Fraction(65, 6)
    assert sv.nu(2) == Fraction(325, 6)


def test_denominator(e0):
    assert zeta_denominator(2, 1) == Poly([1, -3, 2])
    assert zeta_denominator(2, 2, 4) == Poly([0, 1, -5, 4])


@pytest.mark.parametrize("name", ["e0", "c5", "s3"])
def test_functional_equation(name, request):
    c = request.getfixturevalue(name)
    z = artin_zeta(c)
    assert z.invert_substitute(c.q) == z


def test_residue_at_one(c5):
    assert artin_zeta(c5).residue_simple(1) == 5


def test_n_max_must_be_positive(e0):
    with pytest.raises(ValueError):
        special_values(e0, 0)

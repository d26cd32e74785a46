from fractions import Fraction

import pytest

from src.curve.artin import special_values
from src.highrank.compositions import Composition, chain_sum, chain_weight, compositions


def test_small_enumerations():
    assert compositions(0) == [()]
    assert compositions(3) == [(1, 1, 1), (1, 2), (2, 1), (3,)]


@pytest.mark.parametrize("m", range(1, 9))
def test_count(m):
    comps = compositions(m)
    assert len(comps) == 2 ** (m - 1)
    assert all(c.total == m for c in comps)
    assert comps == sorted(comps)


def test_negative_total():
    with pytest.raises(ValueError):
        compositions(-1)


def test_composition_helpers():
    c = Composition((1, 2, 4))
    assert c.first == 1
    assert c.last == 4
    assert c.partial_sums() == [1, 3, 7]


def test_chain_weights(e0):
    sv = special_values(e0, 2)
    assert chain_weight(Composition(()), sv.nu, 2) == 1
    # ν̂_1² / (1 - q²) = 9 / (1 - 4)
    assert chain_weight(Composition((1, 1)), sv.nu, 2) == -3
    assert chain_sum(2, sv.nu, 2) == 6
    assert chain_sum(1, sv.nu, 2) == Fraction(3)

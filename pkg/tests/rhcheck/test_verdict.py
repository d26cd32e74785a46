from fractions import Fraction

import pytest

from src.exact.polynomial import Poly
from src.highrank.bundle import bundle
from src.rhcheck.verdict import circle_verdict, product_identity, rh_verdict


@pytest.mark.parametrize("n", [1, 2, 3])
def test_e0_satisfies_rh(e0, settings, n):
    b = bundle(e0, n)
    verdict = rh_verdict(b, settings)
    assert verdict.holds
    assert verdict.max_rel_deviation < 1e-9
    assert len(verdict.roots) == 2
    for modulus in verdict.moduli:
        assert float(modulus) == pytest.approx(2 ** (n / 2), rel=1e-12)
    assert verdict.s_lines == pytest.approx([0.5, 0.5], abs=1e-12)
    assert verdict.pairing_defect < 1e-9
    assert verdict.conjugate_defect < 1e-9


def test_c5_rank_two(c5, settings):
    verdict = rh_verdict(bundle(c5, 2), settings)
    assert verdict.holds
    assert len(verdict.roots) == 4


def test_product_identity(e0, c5):
    assert product_identity(bundle(e0, 2))
    assert product_identity(bundle(c5, 3))


def test_perturbed_numerator_fails(settings):
    verdict = circle_verdict(Poly([3, 3, 13]), Fraction(4), 2, 2, Fraction(4), settings)
    assert not verdict.holds
    assert verdict.max_rel_deviation > 1e-3

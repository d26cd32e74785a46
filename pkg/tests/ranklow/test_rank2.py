import math

import pytest

from src.errors import DomainViolation, StructureViolation
from src.exact.polynomial import Poly
from src.exact.ratfunc import RatFunc
from src.highrank.assembly import sl_n_zeta
from src.models._utils import Ordering
from src.ranklow.rank2 import (
    rank2_constant,
    sl2_zeta_formula,
    sublemma_fq,
    sublemma_grid,
    yoshida_compare,
    yoshida_sweep,
)
from src.ranklow.sampling import curve_rng

ROOT2 = math.sqrt(2)


def test_two_term_formula_matches_assembly(e0):
    assert 3 * sl2_zeta_formula(e0) == sl_n_zeta(e0, 2)
    two_poles = Poly([1, -1]) * Poly([1, -4])
    assert 3 * sl2_zeta_formula(e0) == 3 + RatFunc(Poly([0, 18]), two_poles)


def test_rank2_constants(e0, c5):
    assert rank2_constant(e0) == 3
    assert rank2_constant(c5) == 10


def test_wrong_rank2_zeta_is_rejected(e0):
    with pytest.raises(StructureViolation):
        rank2_constant(e0, sl_n_zeta(e0, 3))


def test_fractional_transformation_examples():
    alpha, beta = complex(0, ROOT2), complex(0, -ROOT2)
    assert yoshida_compare(alpha, beta, 2, 0, 0.5) == Ordering.GT
    assert yoshida_compare(alpha, beta, 2, 0, 2) == Ordering.LT
    assert yoshida_compare(alpha, beta, 2, 0, 1) == Ordering.EQ
    assert yoshida_compare(1, 2, 2, 0, 0.5) == Ordering.GT


def test_fractional_transformation_domain():
    with pytest.raises(DomainViolation):
        yoshida_compare(1, 1, 2, 0, 0.5)
    with pytest.raises(DomainViolation):
        yoshida_compare(1, 2, 2, -1, 0.5)
    with pytest.raises(DomainViolation):
        yoshida_compare(complex(1, 1), complex(1, -1), 1, 0, 0.5)


def test_sublemma_values():
    assert sublemma_fq(2, 0) == 0
    assert sublemma_fq(2, 1) == 3
    assert sublemma_fq(3, 0.5) > 0
    with pytest.raises(DomainViolation):
        sublemma_fq(1, 1)


def test_sweeps_have_no_violations():
    report = yoshida_sweep(200, curve_rng(0, "test"))
    assert report.checked == 400
    assert report.violations == 0
    assert report.equalities == 0
    grid = sublemma_grid(100)
    assert grid.checked == 100
    assert grid.violations == 0


@pytest.mark.slow
def test_sweeps_at_full_sample_size():
    report = yoshida_sweep(10_000, curve_rng(0, "full"))
    assert report.checked == 20_000
    assert report.violations == 0
    assert report.equalities == 0
    grid = sublemma_grid(1000)
    assert grid.checked == 1000
    assert grid.violations == 0

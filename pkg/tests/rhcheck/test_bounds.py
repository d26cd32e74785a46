import pytest
from mpmath import iv

from src.highrank.bundle import bundle
from src.models._utils import Outcome
from src.rhcheck.bounds import (
    check_beta_bounds,
    check_beta_prime_bounds,
    check_rough_bounds,
    compare_between,
    interval_precision,
)


def test_rough_bounds_e0(e0):
    report = check_rough_bounds(bundle(e0, 2))
    assert report.assumes_rh
    # only the β check exists for g = 1: 6 in [5 - 4, 5 + 4]
    assert len(report.checks) == 1
    check = report.checks[0]
    assert check.outcome == Outcome.PASS
    assert float(check.lower) == 1.0
    assert float(check.upper) == 9.0
    assert report.passed


def test_rough_bounds_c5(c5):
    report = check_rough_bounds(bundle(c5, 2))
    assert [c.name for c in report.checks] == ["alpha'(1n)", "(Q-1)beta'(0)"]
    assert all(c.outcome == Outcome.PASS for c in report.checks)


def test_beta_prime_bounds(e0, c5):
    assert check_beta_prime_bounds(bundle(e0, 2)).passed
    assert check_beta_prime_bounds(bundle(c5, 3)).passed


def test_beta_product_bounds(e0):
    report = check_beta_bounds(bundle(e0, 2))
    assert not report.assumes_rh
    check = report.checks[0]
    assert check.outcome == Outcome.PASS
    assert 0.05 < float(check.lower) < 0.06
    assert 17.4 < float(check.upper) < 17.5


def test_outcomes_of_interval_comparison():
    with interval_precision(64):
        fail = compare_between("x", iv.mpf(1), iv.mpf(10), iv.mpf(2))
        unsure = compare_between("x", iv.mpf([1, 3]), iv.mpf(2), iv.mpf(5))
        ok = compare_between("x", iv.mpf(1), iv.mpf(2), iv.mpf(3))
    assert fail.outcome == Outcome.FAIL
    assert unsure.outcome == Outcome.INDETERMINATE
    assert ok.outcome == Outcome.PASS


def test_interval_precision_is_restored():
    before = iv.prec
    with interval_precision(before + 64):
        assert iv.prec == before + 64
    assert iv.prec == before


@pytest.mark.parametrize("name", ["e0", "c5", "s3"])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_no_bound_fails_on_the_catalog(name, n, request):
    b = bundle(request.getfixturevalue(name), n)
    for report in (check_rough_bounds(b), check_beta_prime_bounds(b), check_beta_bounds(b)):
        assert all(c.outcome != Outcome.FAIL for c in report.checks), report.family


def test_bound_outcomes_are_three_valued():
    assert [o.value for o in Outcome] == ["pass", "fail", "indeterminate"]

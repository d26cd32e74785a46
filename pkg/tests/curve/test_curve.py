import pytest

from src.curve.curve import (
    class_number,
    coefficients_from_power_sums,
    curve_from_coefficients,
    curve_from_point_counts,
    is_prime_power,
    point_counts,
    power_sums,
    synth_curve,
)
from src.errors import TraceOutOfRange, WeilViolation
from src.exact.polynomial import Poly
from src.models.run_settings import RunSettings


def test_curves_from_point_counts(e0, c5):
    assert e0.p == Poly([1, 0, 2])
    assert c5.p == Poly([1, 0, 0, 0, 4])


def test_counts_round_trip(e0, c5, s3):
    assert point_counts(e0, 1) == [3]
    assert point_counts(c5, 2) == [3, 5]
    assert point_counts(s3, 3) == [5, 23, 26]


def test_synthetic_curve_coefficients(s3):
    assert s3.p == Poly([1, 1, 7, 6, 21, 9, 27])


def test_power_sums(e0):
    # reciprocal roots ±i√2
    assert power_sums(e0, 2) == [0, -4]
    assert coefficients_from_power_sums(2, 1, [0]) == e0.p


def test_class_number(e0, c5):
    assert class_number(e0) == 3
    assert class_number(c5) == 5


def test_too_many_points_violate_weil():
    with pytest.raises(WeilViolation):
        curve_from_point_counts("bad", 2, 1, [10])


def test_wrong_number_of_counts():
    with pytest.raises(WeilViolation):
        curve_from_point_counts("bad", 2, 2, [3])


def test_broken_symmetry_is_rejected():
    with pytest.raises(WeilViolation):
        curve_from_coefficients("bad", 2, 1, [1, 0, 3])


def test_trace_out_of_range():
    with pytest.raises(TraceOutOfRange):
        synth_curve("bad", 2, 1, [3])


def test_boundary_trace_is_allowed():
    c = synth_curve("edge", 4, 1, [4])
    assert c.p == Poly([1, -4, 4])


def test_prime_powers():
    assert is_prime_power(2)
    assert is_prime_power(4)
    assert is_prime_power(27)
    assert not is_prime_power(6)
    assert not is_prime_power(1)


def test_non_prime_power_rejected_on_request():
    strict = RunSettings(reject_non_prime_power=True)
    with pytest.raises(WeilViolation):
        synth_curve("odd", 6, 1, [0], strict)
    assert synth_curve("odd", 6, 1, [0]).q == 6

import pytest

from src.curve.curve import curve_from_point_counts, synth_curve
from src.models.run_settings import RunSettings


@pytest.fixture
def settings() -> RunSettings:
    return RunSettings()


@pytest.fixture
def e0():
    """Supersingular elliptic curve over F_2 with three points: P(t) = 1 + 2t²."""
    return curve_from_point_counts("E0", 2, 1, [3])


@pytest.fixture
def c5():
    """y² + y = x⁵ over F_2: P(t) = 1 + 4t⁴."""
    return curve_from_point_counts("C5", 2, 2, [3, 5])


@pytest.fixture
def s3():
    return synth_curve("S3", 3, 3, [1, -2, 0])

import numpy as np

from src.ranklow.sampling import curve_rng, low_discrepancy, two_sided


def test_generators_are_reproducible():
    assert curve_rng(0, "E0").random() == curve_rng(0, "E0").random()
    assert curve_rng(0, "E0").random() != curve_rng(0, "C5").random()
    assert curve_rng(0, "E0").random() != curve_rng(1, "E0").random()


def test_low_discrepancy_points():
    pts = low_discrepancy(50, curve_rng(0, "grid"))
    assert pts.shape == (50, 2)
    assert np.all((pts >= 0) & (pts < 1))
    assert len(np.unique(pts[:, 0])) == 50


def test_two_sided_samples():
    below, above = two_sided(40, curve_rng(3, "sides"), gap=0.01, reach=1.0, im_reach=2.0)
    assert below.shape == above.shape == (40,)
    assert np.all(below.real <= -0.01) and np.all(below.real > -1.0)
    assert np.all(above.real >= 0.01)
    assert np.all(np.abs(above.imag) <= 2.0)
    np.testing.assert_allclose(below.real, -above.real)

from math import isqrt

import hypothesis
import pytest
from hypothesis import strategies as st

from src.curve.artin import artin_zeta, zeta_denominator
from src.curve.curve import synth_curve
from src.exact.polynomial import Poly
from src.exact.ratfunc import RatFunc
from src.highrank.assembly import (
    normalization_constant,
    reconstruct_zeta,
    sl_n_zeta,
    sl_n_zeta_terms,
    verify_cancellation,
)
from src.highrank.bundle import bundle


def _two_poles(big_q):
    return Poly([1, -1]) * Poly([1, -big_q])


def test_rank_one_is_the_artin_zeta(e0, c5):
    assert sl_n_zeta(e0, 1) == artin_zeta(e0)
    assert sl_n_zeta(c5, 1) == artin_zeta(c5)


def test_e0_rank_two_and_three(e0):
    assert sl_n_zeta(e0, 2) == RatFunc(Poly([3, 3, 12]), _two_poles(4))
    assert sl_n_zeta(e0, 3) == RatFunc(Poly([6, 12, 48]), _two_poles(8))


def test_e0_rank_three_terms(e0):
    terms = sl_n_zeta_terms(e0, 3)
    assert len(terms) == 3
    total = terms[0] + terms[1] + terms[2]
    assert total == 6 + RatFunc(Poly([0, 66]), _two_poles(8))


def test_normalization_constant():
    assert normalization_constant(2, 1, 5) == 1
    assert normalization_constant(2, 2, 3) == 8
    assert normalization_constant(3, 3, 2) == 9


@pytest.mark.parametrize("name", ["e0", "c5"])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_cancellation_and_functional_equation(name, n, request):
    c = request.getfixturevalue(name)
    z = sl_n_zeta(c, n)
    assert verify_cancellation(z, n, c.q, c.g)
    assert z.invert_substitute(c.q**n) == z


def test_surviving_pole_is_detected():
    z = RatFunc(1, Poly([1, -2]) * Poly([1, -1]))
    assert not verify_cancellation(z, 2, 2, 1)


def test_extra_power_of_t_is_detected():
    allowed = RatFunc(1, zeta_denominator(2, 2, 4))
    assert verify_cancellation(allowed, 2, 2, 2)
    assert not verify_cancellation(allowed, 2, 2, 1)
    extra = RatFunc(1, zeta_denominator(2, 1, 4) * Poly.monomial(1))
    assert not verify_cancellation(extra, 2, 2, 1)


@pytest.mark.parametrize("name", ["e0", "c5"])
@pytest.mark.parametrize("n", [2, 3])
def test_reconstruction_from_invariants(name, n, request):
    c = request.getfixturevalue(name)
    b = bundle(c, n)
    assert reconstruct_zeta(b.alpha, b.beta0, n, c.g, c.q) == b.zhat


def test_reconstruction_needs_g_alphas():
    with pytest.raises(ValueError):
        reconstruct_zeta([1, 2], 1, 2, 1, 2)


@st.composite
def synthetic_curves(draw):
    q = draw(st.sampled_from([2, 3, 4]))
    g = draw(st.integers(1, 3))
    bound = isqrt(4 * q)
    traces = draw(st.lists(st.integers(-bound, bound), min_size=g, max_size=g))
    return synth_curve("synthetic", q, g, traces)


@hypothesis.settings(max_examples=20, deadline=None)
@hypothesis.given(synthetic_curves(), st.integers(2, 5))
def test_cancellation_on_synthetic_curves(c, n):
    z = sl_n_zeta(c, n)
    assert verify_cancellation(z, n, c.q, c.g)
    assert z.invert_substitute(c.q**n) == z

import pytest

from src.highrank.bundle import alpha_at, bundle
from src.invariants.miracle import alpha_large, beta_relation_check, counting_miracle_check


@pytest.mark.parametrize("name", ["e0", "c5"])
@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_counting_miracle(name, n, request):
    assert counting_miracle_check(request.getfixturevalue(name), n)


def test_miracle_needs_two_ranks(e0):
    with pytest.raises(ValueError):
        counting_miracle_check(e0, 1)


def test_alpha_in_the_vanishing_range(e0, c5):
    assert alpha_large(e0, 2, -1) == 0
    assert alpha_large(e0, 2, 1) == 18
    b = bundle(c5, 2)
    for m in (3, 4):
        assert alpha_large(c5, 2, m, b) == alpha_at(b, m)


@pytest.mark.parametrize(("name", "n"), [("e0", 2), ("e0", 3), ("c5", 2), ("c5", 3)])
def test_beta_relation(name, n, request):
    assert beta_relation_check(request.getfixturevalue(name), n)

"""Compositions (ordered partitions) and the ν̂-weighted chain products over them."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable


class Composition(tuple):
    """An ordered tuple of positive integers; ``()`` is the composition of 0."""

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def total(self) -> int:
        return sum(self)

    @property
    def first(self) -> int:
        return self[0]

    @property
    def last(self) -> int:
        return self[-1]

    def partial_sums(self) -> list[int]:
        out, acc = [], 0
        for k in self:
            acc += k
            out.append(acc)
        return out


@lru_cache(maxsize=None)
def _compositions(m: int) -> tuple[Composition, ...]:
    if m == 0:
        return (Composition(()),)
    out = []
    for head in range(1, m + 1):
        for rest in _compositions(m - head):
            out.append(Composition((head, *rest)))
    return tuple(out)


def compositions(m: int) -> list[Composition]:
    """All compositions of ``m`` in lexicographic order.

    ``compositions(0)`` is ``[()]``; otherwise there are ``2**(m-1)`` of them.

    Examples
    --------
    >>> compositions(3)
    [(1, 1, 1), (1, 2), (2, 1), (3,)]
    """
    if m < 0:
        raise ValueError(f"compositions of a negative integer ({m})")
    return list(_compositions(m))


def chain_weight(comp: Composition, nu: Callable[[int], Fraction], q: int) -> Fraction:
    """Return ``prod nu(k_i) / prod_{j} (1 - q**(k_j + k_(j+1)))``.

    This is the summand shared by every closed formula in the package; the
    empty composition weighs 1.
    """
    weight = Fraction(1)
    for k in comp:
        weight *= nu(k)
    for a, b in zip(comp, comp[1:]):
        weight /= 1 - Fraction(q) ** (a + b)
    return weight


def chain_sum(m: int, nu: Callable[[int], Fraction], q: int) -> Fraction:
    """Sum of :func:`chain_weight` over all compositions of ``m``."""
    return sum((chain_weight(c, nu, q) for c in compositions(m)), Fraction(0))

"""Counting miracle and the relations between α and β invariants."""

from __future__ import annotations

from fractions import Fraction

from ..curve.curve import Curve
from ..highrank.bundle import ZetaBundle, alpha_at, bundle
from ..logger import logger
from .beta import alpha_zero_closed, beta_zagier


def counting_miracle_check(c: Curve, n: int, b: ZetaBundle | None = None) -> bool:
    """True iff ``α_n(0) = q^((n-1)(g-1)) β_(n-1)(0)`` exactly.

    The left side is extracted from the assembled rank-n zeta, the right
    side comes from the closed β formula at rank ``n-1``; the composition
    closed form of ``α_n(0)`` must agree with both.
    """
    if n < 2:
        raise ValueError(f"the counting miracle links ranks n-1 and n, needs n >= 2 (got {n})")
    b = b or bundle(c, n)
    rhs = Fraction(c.q) ** ((n - 1) * (c.g - 1)) * beta_zagier(c, n - 1, 0)
    closed = alpha_zero_closed(c, n)
    holds = b.alpha[0] == rhs == closed
    if not holds:
        logger.error(
            f"{c.name}: counting miracle fails at rank {n}: α(0)={b.alpha[0]}, "
            f"q^((n-1)(g-1)) β_(n-1)(0)={rhs}, closed form={closed}"
        )
    return holds


def alpha_large(c: Curve, n: int, m: int, b: ZetaBundle | None = None) -> Fraction:
    """α(mn), read off β(0) in the range where the vanishing relation applies.

    ``α(mn) = 0`` for ``m < 0``; ``α(mn) = β(0)(q^(mn-n(g-1)) - 1)`` when
    ``mn > 2n(g-1)``; the boundary and below are extracted from the zeta.
    """
    if m < 0:
        return Fraction(0)
    if m * n > 2 * n * (c.g - 1):
        return beta_zagier(c, n, 0) * (Fraction(c.q) ** (m * n - n * (c.g - 1)) - 1)
    return alpha_at(b or bundle(c, n), m)


def beta_relation_check(c: Curve, n: int, b: ZetaBundle | None = None) -> bool:
    """True iff β(mn) = β(0) for ``m`` in ``{-2, -1, 1, 2}`` and β(0) matches the residue."""
    b = b or bundle(c, n)
    base = beta_zagier(c, n, 0)
    shifted = [beta_zagier(c, n, m * n) for m in (-2, -1, 1, 2)]
    return all(v == base for v in shifted) and base == b.beta0

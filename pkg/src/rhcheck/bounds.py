"""Bounds on α and β invariants, evaluated in outward-rounded interval arithmetic.

Every threshold involving ``sqrt(Q)`` is enclosed in an ``mpmath.iv``
interval; a comparison whose intervals overlap is reported as
indeterminate instead of being resolved.
"""

from __future__ import annotations

from contextlib import contextmanager
from fractions import Fraction
from math import comb
from typing import Iterator, Optional

import mpmath
from mpmath import iv
from pydantic import BaseModel, Field

from ..highrank.bundle import ZetaBundle
from ..logger import logger
from ..models._utils import Outcome


class BoundCheck(BaseModel):
    """One inequality ``lower <= value <= upper``."""

    name: str
    lower: str = Field(..., description="Lower endpoint of the enclosure of the lower bound.")
    value: str
    upper: str = Field(..., description="Upper endpoint of the enclosure of the upper bound.")
    outcome: Outcome


class BoundsReport(BaseModel):
    """A group of inequality checks for one (curve, rank)."""

    curve: str
    n: int
    family: str
    assumes_rh: bool = Field(..., description="Whether the inequalities are conditional on RH at rank n.")
    checks: list[BoundCheck]
    rh_holds: Optional[bool] = Field(
        None, description="RH verdict at rank n for the conditional families; None when not evaluated."
    )

    @property
    def passed(self) -> bool:
        return all(c.outcome != Outcome.FAIL for c in self.checks)


@contextmanager
def interval_precision(bits: int) -> Iterator[None]:
    """Temporarily set the precision of the interval context."""
    old = iv.prec
    iv.prec = bits
    try:
        yield
    finally:
        iv.prec = old


def iv_rational(x: Fraction):
    """Interval enclosing an exact rational."""
    x = Fraction(x)
    return iv.mpf(x.numerator) / x.denominator


def endpoints(x) -> tuple:
    """Lower and upper endpoints of an interval as ``mpmath.mpf``."""
    lo, hi = x._mpi_
    return mpmath.mp.make_mpf(lo), mpmath.mp.make_mpf(hi)


def _fmt(x) -> str:
    return mpmath.nstr(x, 20)


def compare_between(name: str, lower, value, upper) -> BoundCheck:
    """Decide ``lower <= value <= upper`` for three intervals."""
    lo_lo, lo_hi = endpoints(lower)
    v_lo, v_hi = endpoints(value)
    up_lo, up_hi = endpoints(upper)
    if lo_hi <= v_lo and v_hi <= up_lo:
        outcome = Outcome.PASS
    elif lo_lo > v_hi or v_lo > up_hi:
        outcome = Outcome.FAIL
    else:
        outcome = Outcome.INDETERMINATE
        logger.warning(f"{name}: interval enclosures overlap at {iv.prec} bits")
    v_text = _fmt(v_lo) if v_lo == v_hi else f"[{_fmt(v_lo)}, {_fmt(v_hi)}]"
    return BoundCheck(name=name, lower=_fmt(lo_lo), value=v_text, upper=_fmt(up_hi), outcome=outcome)


def _chain_center(big_q, m: int):
    return sum((big_q**j for j in range(m + 1)), iv.mpf(0))


def _chain_radius(big_q, sqrt_q, g: int, m: int):
    radius = iv.mpf(0)
    for k in range(3, m + 2):
        inner = sum((comb(2 * g, i - 1) * sqrt_q ** (i - 1) for i in range(1, k + 1)), iv.mpf(0))
        radius += big_q ** (k - 3) * inner
    return radius + 2 * g * big_q ** (m - 1) * sqrt_q


def check_rough_bounds(b: ZetaBundle, precision_bits: int = 128) -> BoundsReport:
    """Rough bounds on the normalized invariants ``α(mn)/α(0)`` and ``β(0)/α(0)``.

    For ``1 <= m <= g-1`` the value ``α(mn)/α(0)`` must lie within
    ``(Q^m + ... + 1) ± R_m``; ``(Q-1) β(0)/α(0)`` obeys the same shape with
    ``m = g``. Here ``R_m = Σ_{k=3}^{m+1} Q^(k-3) Σ_{i=1}^{k} C(2g,i-1) Q^((i-1)/2)
    + 2g Q^(m-1) sqrt(Q)``.
    """
    g = b.g
    checks = []
    with interval_precision(precision_bits):
        big_q = iv_rational(b.big_q)
        sqrt_q = iv.sqrt(big_q)
        for m in range(1, g):
            value = iv_rational(b.alpha[m] / b.alpha[0])
            center, radius = _chain_center(big_q, m), _chain_radius(big_q, sqrt_q, g, m)
            checks.append(compare_between(f"alpha'({m}n)", center - radius, value, center + radius))
        value = iv_rational((b.big_q - 1) * b.beta0 / b.alpha[0])
        center, radius = _chain_center(big_q, g), _chain_radius(big_q, sqrt_q, g, g)
        checks.append(compare_between("(Q-1)beta'(0)", center - radius, value, center + radius))
    return BoundsReport(curve=b.curve.name, n=b.n, family="rough", assumes_rh=True, checks=checks)


def check_beta_prime_bounds(b: ZetaBundle, precision_bits: int = 128) -> BoundsReport:
    """``(√Q-1)^(2g-1)/(√Q+1) <= β(0)/α(0) <= (√Q+1)^(2g-1)/(√Q-1)``."""
    e = 2 * b.g - 1
    with interval_precision(precision_bits):
        sqrt_q = iv.sqrt(iv_rational(b.big_q))
        lower = (sqrt_q - 1) ** e / (sqrt_q + 1)
        upper = (sqrt_q + 1) ** e / (sqrt_q - 1)
        value = iv_rational(b.beta0 / b.alpha[0])
        check = compare_between("beta'(0)", lower, value, upper)
    return BoundsReport(curve=b.curve.name, n=b.n, family="beta_prime", assumes_rh=True, checks=[check])


def check_beta_bounds(b: ZetaBundle, precision_bits: int = 128) -> BoundsReport:
    """Product bounds on ``q^(-binom(n,2)(g-1)) β_n(0)``.

    The lower bound is ``∏_{k=1}^n (√q^k - 1)^(2g-1) / (√q^k + 1)`` and the
    upper bound ``∏_{k=1}^n (√q^k + 1)^(2g-1) / (√q^k - 1)``.
    """
    e = 2 * b.g - 1
    with interval_precision(precision_bits):
        sqrt_q = iv.sqrt(iv.mpf(b.q))
        lower, upper = iv.mpf(1), iv.mpf(1)
        for k in range(1, b.n + 1):
            root_k = sqrt_q**k
            lower *= (root_k - 1) ** e / (root_k + 1)
            upper *= (root_k + 1) ** e / (root_k - 1)
        value = iv_rational(b.beta0 / b.constant)
        check = compare_between("q^(-binom(n,2)(g-1)) beta(0)", lower, value, upper)
    return BoundsReport(curve=b.curve.name, n=b.n, family="beta_product", assumes_rh=False, checks=[check])

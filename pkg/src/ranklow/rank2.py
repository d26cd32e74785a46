"""Rank-two zeta formula and the fractional-transformation inequalities."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

import mpmath
from pydantic import BaseModel

from ..curve.artin import artin_zeta, special_values
from ..curve.curve import Curve
from ..errors import DomainViolation, StructureViolation
from ..exact.polynomial import Poly
from ..exact.ratfunc import RatFunc
from ..highrank.assembly import sl_n_zeta
from ..logger import logger
from ..models._utils import Ordering
from .sampling import low_discrepancy

_EQ_BITS = 113


def sl2_zeta_formula(c: Curve) -> RatFunc:
    """Two-term rank-two formula ``Ẑ(T)/(1 - q²T) - T Ẑ(qT)/(1 - T)`` in ``T = q^(-2s)``."""
    zhat = artin_zeta(c)
    first = zhat * RatFunc.geometric(c.q**2)
    second = zhat.scale_substitute(c.q) * RatFunc(Poly.monomial(1), Poly.linear(1, -1))
    return first - second


def rank2_constant(c: Curve, z2: RatFunc | None = None) -> Fraction:
    """Constant ratio between the assembled rank-two zeta and the two-term formula.

    Raises
    ------
    StructureViolation
        If the ratio is not the constant ``q^(g-1) ν̂_1``.
    """
    z2 = z2 if z2 is not None else sl_n_zeta(c, 2)
    ratio = z2 / sl2_zeta_formula(c)
    expected = Fraction(c.q) ** (c.g - 1) * special_values(c, 1).nu(1)
    if not ratio.is_constant or ratio.constant_value() != expected:
        raise StructureViolation(f"{c.name}: rank-2 ratio {ratio} is not q^(g-1) ν̂_1 = {expected}")
    return expected


def yoshida_compare(alpha, beta, q: float, kappa: float, w) -> Ordering:
    """Compare ``|w-αq^κ||w-βq^κ|`` with ``|1-αq^κw||1-βq^κw|``.

    Parameters
    ----------
    alpha, beta : complex
        A pair with ``αβ = q`` and real ``α+β``, ``|α+β| <= q+1``.
    q : float
        Real number above 1.
    kappa : float
        Non-negative shift exponent.
    w : complex
        Evaluation point.

    Returns
    -------
    Ordering
        ``GT`` for ``|w| < 1`` and ``LT`` for ``|w| > 1``; ``EQ`` only on the
        unit circle.

    Raises
    ------
    DomainViolation
        If the pair or the parameters break the hypotheses.
    """
    with mpmath.workprec(_EQ_BITS):
        a, b, qq, k, ww = (mpmath.mpmathify(v) for v in (alpha, beta, q, kappa, w))
        if qq <= 1 or k < 0:
            raise DomainViolation(f"need q > 1 and kappa >= 0 (got q={q}, kappa={kappa})")
        if abs(a * b - qq) > 1e-12 * qq:
            raise DomainViolation(f"alpha*beta = {complex(a * b)} differs from q = {q}")
        trace = a + b
        if abs(mpmath.im(trace)) > 1e-12 * (1 + abs(trace)):
            raise DomainViolation(f"alpha + beta = {complex(trace)} is not real")
        if abs(mpmath.re(trace)) > (qq + 1) * (1 + 1e-12):
            raise DomainViolation(f"|alpha + beta| exceeds q + 1 = {q + 1}")
        shift = qq**k
        lhs = abs(ww - a * shift) * abs(ww - b * shift)
        rhs = abs(1 - a * shift * ww) * abs(1 - b * shift * ww)
        slack = mpmath.ldexp(max(mpmath.mpf(1), lhs, rhs), -100)
        if abs(lhs - rhs) <= slack:
            return Ordering.EQ
        return Ordering.GT if lhs > rhs else Ordering.LT


def sublemma_fq(q: float, x: float):
    """``f_q(x) = q^(2x+1) + 1 - q^x (q+1)``, non-negative with equality only at 0."""
    if q <= 1 or x < 0:
        raise DomainViolation(f"need q > 1 and x >= 0 (got q={q}, x={x})")
    with mpmath.workprec(_EQ_BITS):
        qq, xx = mpmath.mpf(q), mpmath.mpf(x)
        return qq ** (2 * xx + 1) + 1 - qq**xx * (qq + 1)


class SweepReport(BaseModel):
    """Counts of a sampled inequality sweep."""

    name: str
    checked: int
    violations: int
    equalities: int
    skipped: int = 0


def yoshida_sweep(samples: int, rng, band: float = 1e-6) -> SweepReport:
    """Check :func:`yoshida_compare` on admissible random data on both sides of ``|w| = 1``."""
    pts = low_discrepancy(2 * samples, rng)
    extra = rng.random((2 * samples, 3))
    violations = equalities = 0
    for i, (u, v) in enumerate(pts):
        q = 1.5 + 30 * extra[i, 0]
        theta = float(mpmath.pi) * extra[i, 1]
        kappa = 2 * extra[i, 2]
        alpha = mpmath.sqrt(q) * mpmath.expj(theta)
        beta = mpmath.sqrt(q) * mpmath.expj(-theta)
        inside = i < samples
        radius = band + (1 - 2 * band) * u if inside else 1 + band + 3 * u
        w = radius * mpmath.expj(2 * mpmath.pi * v)
        result = yoshida_compare(alpha, beta, q, kappa, w)
        if result == Ordering.EQ:
            equalities += 1
        if result != (Ordering.GT if inside else Ordering.LT):
            violations += 1
    if violations:
        logger.error(f"Fractional-transformation sweep: {violations} violations out of {2 * samples}")
    return SweepReport(name="yoshida", checked=2 * samples, violations=violations, equalities=equalities)


def sublemma_grid(points: int = 1000) -> SweepReport:
    """Evaluate :func:`sublemma_fq` on a log-spaced ``(q, x)`` grid with ``x > 0``."""
    side = max(isqrt(points - 1) + 1, 2)
    violations = 0
    for q in (1 + 10 ** (-3 + 5 * i / (side - 1)) for i in range(side)):
        for x in (10 ** (-4 + 5 * j / (side - 1)) for j in range(side)):
            if sublemma_fq(q, x) <= 0:
                violations += 1
    return SweepReport(name="sublemma", checked=side * side, violations=violations, equalities=0)

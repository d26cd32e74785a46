"""Ratio inequalities between shifted zeta values and the f/g ratio functions.

The sampled predicates evaluate ``ζ̂(s) = Ẑ(q^-s)`` in mpmath at the run
precision. The f/g functions are exact, written in ``u = q^(nσ + n/2)``
so every exponent of q is an integer.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

import mpmath
from pydantic import BaseModel, Field

from ..curve.artin import artin_zeta, special_values
from ..curve.curve import Curve
from ..errors import DomainViolation, SampleAtPole
from ..exact.polynomial import Poly
from ..exact.ratfunc import RatFunc
from ..highrank.compositions import chain_weight, compositions
from ..logger import logger
from ..models.run_settings import RunSettings
from .sampling import curve_rng, two_sided

_GAP = 1e-3
_REACH = 1.0


class PredicateReport(BaseModel):
    """Outcome of a sampled ``> 1`` / ``< 1`` predicate on both sides of its threshold."""

    name: str
    curve: str
    n: int
    a: int
    checked: int
    violations: int
    equalities: int = Field(..., description="Samples with |value| = 1 within tolerance.")
    skipped: int = Field(0, description="Samples dropped because they hit a pole.")
    worst: Optional[float] = Field(
        None, description="Smallest signed log-margin in the expected direction."
    )

    @property
    def passed(self) -> bool:
        return self.violations == 0


def _zhat_at(zhat: RatFunc, s, log_q):
    """``Ẑ(q^-s)`` at complex ``s``; raises :class:`SampleAtPole` near a pole."""
    t = mpmath.exp(-s * log_q)
    den = zhat.den.evaluate_mp(t)
    if abs(den) < mpmath.ldexp(1, -mpmath.mp.prec // 2):
        raise SampleAtPole(f"s={complex(s)} is within rounding of a pole")
    return zhat.num.evaluate_mp(t) / den


def _safe_ratio(top, bottom):
    if abs(bottom) < mpmath.ldexp(1, -mpmath.mp.prec // 2):
        raise SampleAtPole("denominator value vanishes")
    return top / bottom


class _Tally:
    def __init__(self, tolerance: float):
        self.tolerance = tolerance
        self.checked = self.violations = self.equalities = self.skipped = 0
        self.worst: Optional[float] = None

    def record(self, value, expect_above: bool) -> None:
        self.checked += 1
        margin = float(mpmath.log(abs(value)))
        if abs(margin) <= self.tolerance:
            self.equalities += 1
            return
        signed = margin if expect_above else -margin
        self.worst = signed if self.worst is None else min(self.worst, signed)
        if signed < 0:
            self.violations += 1

    def report(self, name: str, c: Curve, n: int, a: int) -> PredicateReport:
        if self.violations:
            logger.error(f"{c.name}: {name}(n={n}, a={a}) has {self.violations} violations")
        if self.skipped:
            logger.warning(f"{c.name}: {name}(n={n}, a={a}) skipped {self.skipped} samples at poles")
        return PredicateReport(
            name=name,
            curve=c.name,
            n=n,
            a=a,
            checked=self.checked,
            violations=self.violations,
            equalities=self.equalities,
            skipped=self.skipped,
            worst=self.worst,
        )


def _check_rank(n: int, a: int, a_max: int) -> None:
    if n < 2 or not 1 <= a <= a_max:
        raise DomainViolation(f"need n >= 2 and 1 <= a <= {a_max} (got n={n}, a={a})")


def zeta_ratio_predicate(
    c: Curve,
    n: int,
    a: int,
    samples: int = 1000,
    seed: int = 0,
    settings: Optional[RunSettings] = None,
) -> PredicateReport:
    """Sampled check of ``|ζ(nσ - n/2 + a) / ζ(a - n/2 - nσ)|`` against 1.

    The zeta here is the uncompleted one, ``ζ(s) = q^(-s(g-1)) ζ̂(s)``, and
    ``b = n + 1 - a``. The ratio must exceed 1 for ``Re σ < 0`` and stay below
    1 for ``Re σ > 0``.

    Parameters
    ----------
    c : Curve
        The curve.
    n, a : int
        Rank and summand index, ``1 <= a <= n``.
    samples : int
        Number of σ samples per side of ``Re σ = 0``.
    seed : int
        Run seed; combined with the curve name.
    settings : RunSettings, optional
        Precision and equality tolerance.
    """
    _check_rank(n, a, n)
    settings = settings or RunSettings()
    zhat = artin_zeta(c)
    tally = _Tally(settings.tolerance)
    rng = curve_rng(seed, f"{c.name}:zeta_ratio:{n}:{a}")
    with mpmath.workprec(settings.precision_bits):
        log_q = mpmath.log(c.q)
        im_reach = float(mpmath.pi / (n * log_q))
        below, above = two_sided(samples, rng, _GAP, _REACH, im_reach)
        for side, expect_above in ((below, True), (above, False)):
            for sigma in side:
                s = mpmath.mpc(sigma.real, sigma.imag)
                x = n * s - mpmath.mpf(n) / 2 + a
                y = a - mpmath.mpf(n) / 2 - n * s
                try:
                    value = _safe_ratio(_zhat_at(zhat, x, log_q), _zhat_at(zhat, y, log_q))
                except SampleAtPole:
                    tally.skipped += 1
                    continue
                value *= mpmath.exp((y - x) * (c.g - 1) * log_q)
                tally.record(value, expect_above)
    return tally.report("zeta_ratio", c, n, a)


def shift_ratio_predicate(
    c: Curve,
    n: int,
    a: int,
    samples: int = 1000,
    seed: int = 0,
    settings: Optional[RunSettings] = None,
) -> PredicateReport:
    """Sampled check of the consecutive-value ratio against its Möbius factor.

    With ``x = nσ - n/2 + a`` and ``w = q^-x`` the quantity
    ``|ζ̂(x)/ζ̂(x+1)| / |(q - w)/(1 - qw)|`` must exceed 1 when
    ``Re x < 0`` and stay below 1 when ``Re x > 0``, i.e. on either side of
    ``|q^(nσ)| = q^(n/2 - a)``.
    """
    _check_rank(n, a, n - 1)
    settings = settings or RunSettings()
    zhat = artin_zeta(c)
    tally = _Tally(settings.tolerance)
    rng = curve_rng(seed, f"{c.name}:shift_ratio:{n}:{a}")
    with mpmath.workprec(settings.precision_bits):
        log_q = mpmath.log(c.q)
        q = mpmath.mpf(c.q)
        # x = nσ - n/2 + a, so sampling x around 0 covers both sides of the threshold
        below, above = two_sided(samples, rng, _GAP, _REACH, float(mpmath.pi / log_q))
        for side, expect_above in ((below, True), (above, False)):
            for point in side:
                x = mpmath.mpc(point.real, point.imag)
                w = mpmath.exp(-x * log_q)
                try:
                    value = _safe_ratio(_zhat_at(zhat, x, log_q), _zhat_at(zhat, x + 1, log_q))
                    value = _safe_ratio(value, _safe_ratio(q - w, 1 - q * w))
                except SampleAtPole:
                    tally.skipped += 1
                    continue
                tally.record(value, expect_above)
    return tally.report("shift_ratio", c, n, a)


def fg_ratio_functions(c: Curve, n: int, a: int) -> tuple[RatFunc, RatFunc]:
    """The pair ``(f_{n,a}, g_{n,a})`` as exact rational functions of ``u = q^(nσ + n/2)``.

    ``f`` sums over compositions ``k`` of ``n - a`` the chain weight times
    ``1/(1 - q^(a + k_last - n) u)``; ``g`` sums over compositions ``l`` of
    ``a - 1`` the chain weight times ``u/(u - q^(n - a + 1 + l_1))``. An empty
    composition contributes 1.
    """
    _check_rank(n, a, n)
    sv = special_values(c, n)
    u = Poly.monomial(1)
    f, g = RatFunc(0), RatFunc(0)
    for comp in compositions(n - a):
        weight = chain_weight(comp, sv.nu, c.q)
        if not comp:
            f += weight
            continue
        # a + k_last - n <= 0
        f += RatFunc.geometric(Fraction(c.q) ** (a + comp.last - n)) * weight
    for comp in compositions(a - 1):
        weight = chain_weight(comp, sv.nu, c.q)
        if not comp:
            g += weight
            continue
        g += RatFunc(u, Poly.linear(-(c.q ** (n - a + 1 + comp.first)), 1)) * weight
    return f, g


def r_ratio_function(c: Curve, n: int, a: int) -> RatFunc:
    """``r_{n,a} = f_{n,a} g_{n,a} / (f_{n,a+1} g_{n,a+1})`` in ``u``."""
    _check_rank(n, a, n - 1)
    f_a, g_a = fg_ratio_functions(c, n, a)
    f_b, g_b = fg_ratio_functions(c, n, a + 1)
    return f_a * g_a / (f_b * g_b)

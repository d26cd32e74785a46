"""Rank-three decomposition of the zeta function and its verdicts.

The rank-three zeta splits as ``z1 + z2 + z3`` (one term for each value of
``a``, constant removed). The halves ``z_le2 = z1 + z2/2`` and
``z_ge2 = z2/2 + z3`` are exchanged by the functional equation.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

import mpmath
from pydantic import BaseModel, ConfigDict, Field

from ..curve.artin import special_values
from ..curve.curve import Curve
from ..errors import StructureViolation
from ..exact.polynomial import to_mpf
from ..exact.ratfunc import RatFunc
from ..highrank.assembly import normalization_constant, sl_n_zeta, sl_n_zeta_terms
from ..highrank.bundle import ZetaBundle, bundle
from ..logger import logger
from ..models.run_settings import RunSettings
from ..rhcheck.roots import find_roots_adaptive
from ..rhcheck.verdict import RhVerdict, circle_verdict


class Rank3Parts(BaseModel):
    """The three summands of the rank-three zeta and their two halves."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    curve: Curve
    z1: RatFunc
    z2: RatFunc
    z3: RatFunc
    z_ge2: RatFunc = Field(..., description="z2/2 + z3.")
    z_le2: RatFunc = Field(..., description="z1 + z2/2.")


def rank3_parts(c: Curve) -> Rank3Parts:
    """Split the rank-three zeta and verify the decomposition identities.

    Raises
    ------
    StructureViolation
        If the parts do not sum to the assembled zeta (up to
        ``q^(3(g-1))``) or the halves are not exchanged by ``T -> 1/(q³T)``.
    """
    z1, z2, z3 = sl_n_zeta_terms(c, 3)
    half = Fraction(1, 2)
    z_ge2 = z2 * half + z3
    z_le2 = z1 + z2 * half
    total = z1 + z2 + z3
    if total != z_le2 + z_ge2:
        raise StructureViolation(f"{c.name}: rank-3 halves do not add up")
    if total * normalization_constant(c.q, c.g, 3) != sl_n_zeta(c, 3):
        raise StructureViolation(f"{c.name}: rank-3 parts do not sum to the assembled zeta")
    if z_le2.invert_substitute(c.q**3) != z_ge2:
        raise StructureViolation(f"{c.name}: halves are not exchanged by the functional equation")
    logger.debug(f"{c.name}: rank-3 decomposition verified")
    return Rank3Parts(curve=c, z1=z1, z2=z2, z3=z3, z_ge2=z_ge2, z_le2=z_le2)


def rh_third_line(parts: Rank3Parts, settings: Optional[RunSettings] = None) -> RhVerdict:
    """Test whether the zeros of ``z_ge2`` lie on ``Re(s) = 1/3``, i.e. ``|T| = 1/q``.

    The outcome is data: the verdict may come out false.
    """
    c = parts.curve
    q_sq = Fraction(c.q) ** 2
    verdict = circle_verdict(parts.z_ge2.num, q_sq, 3, c.q, q_sq, settings)
    logger.info(
        f"{c.name}: zeros of the upper rank-3 half "
        f"{'lie' if verdict.holds else 'do NOT lie'} on Re(s)=1/3 "
        f"(max deviation {verdict.max_rel_deviation:.3e})"
    )
    return verdict


class HalfPlaneVerdict(BaseModel):
    """Whether every zero of the rank-three numerator has ``|T| <= Q^(-1/2)``."""

    curve: str
    max_modulus_ratio: float = Field(..., description="max |T| / Q^(-1/2) over numerator roots.")
    tolerance: float
    holds: bool
    precision_bits: int


def half_plane_verdict(
    c: Curve, settings: Optional[RunSettings] = None, b: ZetaBundle | None = None
) -> HalfPlaneVerdict:
    """No root of the rank-three numerator may satisfy ``|T| > Q^(-1/2)(1 + tol)``."""
    settings = settings or RunSettings()
    b = b or bundle(c, 3)
    roots, bits = find_roots_adaptive(b.numerator, settings)
    with mpmath.workprec(bits):
        scale = mpmath.sqrt(to_mpf(b.big_q))
        worst = max(float(abs(t) * scale) for t in roots)
    return HalfPlaneVerdict(
        curve=c.name,
        max_modulus_ratio=worst,
        tolerance=settings.tolerance,
        holds=worst <= 1 + settings.tolerance,
        precision_bits=bits,
    )


class NuRatioReport(BaseModel):
    """The two lower bounds on ``ν̂_2/ν̂_1²`` for genus at least two."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    curve: str
    genus_in_scope: bool
    ratio: Fraction = Field(..., description="ν̂_2 / ν̂_1².")
    first_threshold: Fraction = Field(..., description="q / (q² - 1).")
    second_threshold: Fraction = Field(..., description="(3/2) / (q - 1).")
    first_holds: bool
    second_holds: bool
    beta_form: Fraction = Field(..., description="q^(-(g-1)) β_2(0)/ν̂_1² - 1/(q+1).")
    beta_form_holds: bool


def nu_ratio_check(c: Curve, b2: ZetaBundle | None = None) -> NuRatioReport:
    """Exact comparison of ``ν̂_2/ν̂_1²`` with ``q/(q²-1)`` and ``(3/2)/(q-1)``."""
    sv = special_values(c, 2)
    q = Fraction(c.q)
    x = sv.nu(2) / sv.nu(1) ** 2
    b2 = b2 or bundle(c, 2, sv)
    beta_form = b2.beta0 / q ** (c.g - 1) / sv.nu(1) ** 2 - 1 / (q + 1)
    first, second = q / (q**2 - 1), Fraction(3, 2) / (q - 1)
    return NuRatioReport(
        curve=c.name,
        genus_in_scope=c.g >= 2,
        ratio=x,
        first_threshold=first,
        second_threshold=second,
        first_holds=x > first,
        second_holds=x > second,
        beta_form=beta_form,
        beta_form_holds=beta_form > 0,
    )


class DiscReport(BaseModel):
    """Exact data of the disc that must sit inside the unit disc."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    curve: str
    genus_in_scope: bool
    ratio: Fraction = Field(..., description="ν̂_2 / ν̂_1².")
    first_threshold: Fraction = Field(..., description="q / (q² - 1).")
    second_threshold: Fraction = Field(..., description="(3/2) / (q - 1).")
    max_threshold: Fraction = Field(..., description="max of the two sufficient thresholds.")
    center: Fraction
    radius: Fraction
    contained: bool


def disc_condition(c: Curve) -> DiscReport:
    """Check that the disc with the given center and radius lies in ``|w| < 1``.

    With ``x = ν̂_2/ν̂_1²`` the center is
    ``(x + 1/(1-q²)) / (q x + q²/(1-q²))`` and the radius
    ``1 / (2q (x + q/(1-q²)))``; both are rational so containment is exact.
    """
    sv = special_values(c, 2)
    q = Fraction(c.q)
    x = sv.nu(2) / sv.nu(1) ** 2
    inv = 1 / (1 - q**2)
    center = (x + inv) / (q * x + q**2 * inv)
    radius_den = 2 * q * (x + q * inv)
    radius = 1 / radius_den if radius_den != 0 else Fraction(0)
    contained = radius_den > 0 and abs(center) + radius < 1
    second = Fraction(3, 2) / (q - 1)
    alternative = (Fraction(1, 2) + (q**2 + 1) / (q**2 - 1)) / (q + 1)
    if c.g < 2:
        logger.info(f"{c.name}: genus {c.g} is below the range of the disc condition; reported only")
    return DiscReport(
        curve=c.name,
        genus_in_scope=c.g >= 2,
        ratio=x,
        first_threshold=q / (q**2 - 1),
        second_threshold=second,
        max_threshold=max(second, alternative),
        center=center,
        radius=radius,
        contained=contained,
    )

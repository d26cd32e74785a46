"""Rank-n zeta bundles: numerator, α-invariants, β(0) and pole structure."""

from __future__ import annotations

from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field

from ..curve.artin import SpecialValues, zeta_denominator
from ..curve.curve import Curve, functional_equation_defects
from ..errors import StructureViolation
from ..exact.polynomial import Poly
from ..exact.ratfunc import RatFunc
from ..logger import logger
from .assembly import normalization_constant, sl_n_zeta


class ZetaBundle(BaseModel):
    """A rank-n zeta function together with its extracted invariants."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    curve: Curve
    n: int = Field(..., ge=1, description="Rank.")
    big_q: Fraction = Field(..., description="Q = q^n.")
    zhat: RatFunc = Field(..., description="The rank-n zeta in T = q^(-ns), constant included.")
    numerator: Poly = Field(..., description="P_{X,n}(T), of degree 2g.")
    alpha: tuple[Fraction, ...] = Field(..., description="α(mn) for m = 0..g-1.")
    beta0: Fraction = Field(..., description="β(0), the residue at T = 1.")
    constant: Fraction = Field(..., description="q^(binom(n,2)(g-1)).")

    @property
    def g(self) -> int:
        return self.curve.g

    @property
    def q(self) -> int:
        return self.curve.q


class PoleReport(BaseModel):
    """Orders and residues of the poles of a rank-n zeta."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    order_at_one: int
    order_at_inverse_q: int
    order_at_zero: int
    extra_pole_degree: int = Field(..., description="Degree of the denominator left after removing T, T-1, T-1/Q.")
    residue_at_one: Fraction
    residue_at_inverse_q: Fraction
    beta_from_inverse_q: Fraction = Field(..., description="-Q times the residue at T = 1/Q.")

    @property
    def ok(self) -> bool:
        return (
            self.order_at_one == 1
            and self.order_at_inverse_q == 1
            and self.extra_pole_degree == 0
        )


def pole_report(z: RatFunc, big_q: Fraction) -> PoleReport:
    """Check that the only finite nonzero poles of ``z`` are simple poles at 1 and 1/Q."""
    big_q = Fraction(big_q)
    inv = 1 / big_q
    k, rest = z.den.shift_down()
    for root in (Fraction(1), inv):
        while rest.degree > 0 and rest.evaluate(root) == 0:
            rest = rest // Poly.linear(-root, 1)
    at_one = z.pole_order(1)
    at_inv = z.pole_order(inv)
    res_one = z.residue_simple(1) if at_one <= 1 else Fraction(0)
    res_inv = z.residue_simple(inv) if at_inv <= 1 else Fraction(0)
    return PoleReport(
        order_at_one=at_one,
        order_at_inverse_q=at_inv,
        order_at_zero=k,
        extra_pole_degree=rest.degree,
        residue_at_one=res_one,
        residue_at_inverse_q=res_inv,
        beta_from_inverse_q=-big_q * res_inv,
    )


def _check_numerator(c: Curve, n: int, numerator: Poly, big_q: Fraction, alpha0: Fraction) -> None:
    g = c.g
    if numerator.degree != 2 * g:
        raise StructureViolation(
            f"{c.name}, rank {n}: numerator has degree {numerator.degree}, expected {2 * g}"
        )
    if numerator[0] != alpha0:
        raise StructureViolation(f"{c.name}, rank {n}: constant term {numerator[0]} != α(0) = {alpha0}")
    if numerator.leading != big_q**g * alpha0:
        raise StructureViolation(f"{c.name}, rank {n}: leading coefficient is not Q^g α(0)")
    if any(functional_equation_defects(numerator, big_q, g)):
        raise StructureViolation(f"{c.name}, rank {n}: numerator breaks c_(2g-i) = Q^(g-i) c_i")


def bundle_from_zeta(c: Curve, n: int, z: RatFunc) -> ZetaBundle:
    """Extract and check the invariants of an assembled rank-n zeta.

    Raises
    ------
    StructureViolation
        If ``z`` times ``T^(g-1)(1-T)(1-QT)`` is not a polynomial of the
        required shape.
    """
    big_q = Fraction(c.q) ** n
    product = z * zeta_denominator(c.q, c.g, big_q)
    if not product.is_polynomial:
        raise StructureViolation(
            f"{c.name}, rank {n}: denominator {z.den} does not divide T^(g-1)(1-T)(1-QT)"
        )
    numerator = product.num.scale(1 / product.den[0])
    shifted = z * RatFunc.monomial(c.g - 1)
    alpha = tuple(shifted.taylor_coefficients(c.g))
    _check_numerator(c, n, numerator, big_q, alpha[0])
    beta0 = z.residue_simple(1)
    if beta0 != numerator.evaluate(1) / (big_q - 1):
        raise StructureViolation(f"{c.name}, rank {n}: residue at 1 differs from P_n(1)/(Q-1)")
    logger.info(f"{c.name}: rank-{n} bundle with α(0) = {alpha[0]}, β(0) = {beta0}")
    return ZetaBundle(
        curve=c,
        n=n,
        big_q=big_q,
        zhat=z,
        numerator=numerator,
        alpha=alpha,
        beta0=beta0,
        constant=normalization_constant(c.q, c.g, n),
    )


def bundle(c: Curve, n: int, sv: SpecialValues | None = None) -> ZetaBundle:
    """Assemble the rank-n zeta of ``c`` and extract its invariants.

    Examples
    --------
    >>> b = bundle(e0, 2)
    >>> b.numerator, b.alpha, b.beta0
    (Poly(3 + 3*T + 12*T^2), (Fraction(3, 1),), Fraction(6, 1))
    """
    return bundle_from_zeta(c, n, sl_n_zeta(c, n, sv))


def alpha_at(b: ZetaBundle, m: int) -> Fraction:
    """α(mn) for any ``m``, as a coefficient of ``T^(g-1)`` times the zeta."""
    if m < 0:
        return Fraction(0)
    if m < len(b.alpha):
        return b.alpha[m]
    shifted = b.zhat * RatFunc.monomial(b.g - 1)
    return shifted.taylor_coefficients(m + 1)[m]

"""Independent routes to the β-invariants of a curve."""

from __future__ import annotations

from fractions import Fraction
from math import comb

from pydantic import BaseModel, ConfigDict

from ..curve.artin import SpecialValues, special_values
from ..curve.curve import Curve
from ..errors import NonIntegralExponent
from ..highrank.assembly import normalization_constant
from ..highrank.bundle import ZetaBundle, bundle, pole_report
from ..highrank.compositions import Composition, chain_sum, compositions


def _frac(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def beta_total(c: Curve, n: int, sv: SpecialValues | None = None) -> Fraction:
    """Total mass ``q^(binom(n,2)(g-1)) ν̂_n`` over all rank-n bundles of degree 0."""
    sv = sv or special_values(c, n)
    return normalization_constant(c.q, c.g, n) * sv.nu(n)


def zagier_exponent(comp: Composition, n: int, d: int) -> int:
    """Summed exponent ``Σ_i (n_i + n_(i+1)) {S_i d / n}`` of one composition.

    Raises
    ------
    NonIntegralExponent
        If the sum is not an integer.
    """
    sums = comp.partial_sums()
    total = Fraction(0)
    for i in range(len(comp) - 1):
        total += (comp[i] + comp[i + 1]) * _frac(Fraction(sums[i] * d, n))
    if total.denominator != 1:
        raise NonIntegralExponent(f"exponent {total} for composition {comp}, n={n}, d={d}")
    return int(total)


def beta_zagier(c: Curve, n: int, d: int = 0, sv: SpecialValues | None = None) -> Fraction:
    """β_n(d) by the closed composition formula.

    Parameters
    ----------
    c : Curve
        The curve.
    n : int
        Rank, at least 1.
    d : int
        Degree; only ``d mod n`` matters.
    sv : SpecialValues, optional
        Precomputed special values up to ``n``.

    Returns
    -------
    Fraction
        ``q^(binom(n,2)(g-1)) Σ_comp q^E ∏ν̂(n_i) / ∏(1 - q^(n_i+n_(i+1)))``.
    """
    if n < 1:
        raise ValueError(f"rank must be at least 1, got {n}")
    sv = sv or special_values(c, n)
    q = Fraction(c.q)
    total = Fraction(0)
    for comp in compositions(n):
        weight = q ** zagier_exponent(comp, n, d)
        for k in comp:
            weight *= sv.nu(k)
        for a, b in zip(comp, comp[1:]):
            weight /= 1 - q ** (a + b)
        total += weight
    return normalization_constant(c.q, c.g, n) * total


def alpha_zero_closed(c: Curve, n: int, sv: SpecialValues | None = None) -> Fraction:
    """α_n(0) by the composition sum over ``n-1``, without assembling the zeta."""
    if n < 1:
        raise ValueError(f"rank must be at least 1, got {n}")
    sv = sv or special_values(c, max(n - 1, 1))
    return Fraction(c.q) ** (comb(n, 2) * (c.g - 1)) * chain_sum(n - 1, sv.nu, c.q)


class BetaRoutes(BaseModel):
    """β_n(0) obtained along four independent routes."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    residue_at_one: Fraction
    numerator_at_one: Fraction
    residue_at_inverse_q: Fraction
    zagier: Fraction

    @property
    def agree(self) -> bool:
        return len({self.residue_at_one, self.numerator_at_one, self.residue_at_inverse_q, self.zagier}) == 1


def beta_routes(c: Curve, n: int, b: ZetaBundle | None = None) -> BetaRoutes:
    """Compare the residue, numerator, 1/Q-residue and closed-formula routes."""
    b = b or bundle(c, n)
    poles = pole_report(b.zhat, b.big_q)
    return BetaRoutes(
        residue_at_one=poles.residue_at_one,
        numerator_at_one=b.numerator.evaluate(1) / (b.big_q - 1),
        residue_at_inverse_q=poles.beta_from_inverse_q,
        zagier=beta_zagier(c, n, 0),
    )

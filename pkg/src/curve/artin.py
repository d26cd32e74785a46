"""The completed Artin zeta function of a curve and its special values."""

from __future__ import annotations

from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field

from ..exact.polynomial import Poly
from ..exact.ratfunc import RatFunc
from .curve import Curve


class SpecialValues(BaseModel):
    """Special values ``ζ̂(k)`` and their running products ``ν̂_k``.

    Both sequences are stored from ``k = 1``; use :meth:`zeta` and :meth:`nu`
    for 1-based access. ``ν̂_0 = 1`` is the empty product.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    zeta_at: tuple[Fraction, ...] = Field(..., description="ζ̂(1), ..., ζ̂(n_max).")
    nu_hat: tuple[Fraction, ...] = Field(..., description="ν̂_1, ..., ν̂_(n_max).")

    @property
    def n_max(self) -> int:
        return len(self.zeta_at)

    def zeta(self, k: int) -> Fraction:
        if not 1 <= k <= self.n_max:
            raise IndexError(f"ζ̂({k}) not computed (n_max={self.n_max})")
        return self.zeta_at[k - 1]

    def nu(self, k: int) -> Fraction:
        if k == 0:
            return Fraction(1)
        if not 1 <= k <= self.n_max:
            raise IndexError(f"ν̂_{k} not computed (n_max={self.n_max})")
        return self.nu_hat[k - 1]


def zeta_denominator(q: int, g: int, big_q: Fraction | int | None = None) -> Poly:
    """Return ``T**(g-1) (1-T)(1-QT)`` with ``Q = q`` unless given."""
    big_q = q if big_q is None else big_q
    return Poly.monomial(g - 1) * Poly.linear(1, -1) * Poly.linear(1, -Fraction(big_q))


def artin_zeta(c: Curve) -> RatFunc:
    """Completed Artin zeta ``Ẑ(t) = P(t) / (t^(g-1) (1-t)(1-qt))``.

    It satisfies ``Ẑ(1/(qt)) = Ẑ(t)`` exactly.
    """
    return RatFunc(c.p, zeta_denominator(c.q, c.g))


def special_values(c: Curve, n_max: int) -> SpecialValues:
    """Compute ``ζ̂(1..n_max)`` and ``ν̂_1..ν̂_(n_max)``.

    ``ζ̂(1)`` is the residue of ``Ẑ`` at ``t = 1``, which equals ``P(1)/(q-1)``;
    ``ζ̂(k) = Ẑ(q^-k)`` for ``k >= 2``.

    Examples
    --------
    >>> sv = special_values(e0, 3)
    >>> sv.zeta_at
    (Fraction(3, 1), Fraction(3, 1), Fraction(11, 7))
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    z = artin_zeta(c)
    values = [z.residue_simple(1)]
    values.extend(z.evaluate(Fraction(1, c.q**k)) for k in range(2, n_max + 1))
    nus, running = [], Fraction(1)
    for v in values:
        running *= v
        nus.append(running)
    return SpecialValues(zeta_at=tuple(values), nu_hat=tuple(nus))

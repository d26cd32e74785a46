"""Assembly of the rank-n zeta function from the composition-sum closed formula.

Everything is written in the variable ``T = q^(-ns)``. The building blocks
are rewritten as

    ζ̂(ns - n + a)                  ->  Ẑ(q^(n-a) T)
    1 / (1 - q^(ns - n + a + k_p))  ->  T / (T - q^(-n+a+k_p))
    1 / (1 - q^(-ns + n - a + 1 + l_1)) -> 1 / (1 - q^(n-a+1+l_1) T)

and an empty composition contributes 1 together with no boundary factor.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Sequence

from ..curve.artin import SpecialValues, artin_zeta, special_values, zeta_denominator
from ..curve.curve import Curve
from ..exact.polynomial import Poly
from ..exact.ratfunc import RatFunc
from ..logger import logger
from .compositions import chain_weight, compositions


def normalization_constant(q: int, g: int, n: int) -> Fraction:
    """``C_{n,g;q} = q^(binom(n,2)(g-1))``."""
    return Fraction(q) ** (comb(n, 2) * (g - 1))


def left_sum(n: int, a: int, sv: SpecialValues, q: int) -> RatFunc:
    """Composition sum over ``k`` of ``n-a`` with the ``k_p`` boundary factor."""
    total = RatFunc(0)
    for comp in compositions(n - a):
        weight = chain_weight(comp, sv.nu, q)
        if not comp:
            total = total + weight
            continue
        shift = Fraction(q) ** (-n + a + comp.last)
        boundary = RatFunc(Poly.monomial(1), Poly.linear(-shift, 1))
        total = total + boundary * weight
    return total


def right_sum(n: int, a: int, sv: SpecialValues, q: int) -> RatFunc:
    """Composition sum over ``l`` of ``a-1`` with the ``l_1`` boundary factor."""
    total = RatFunc(0)
    for comp in compositions(a - 1):
        weight = chain_weight(comp, sv.nu, q)
        if not comp:
            total = total + weight
            continue
        boundary = RatFunc.geometric(Fraction(q) ** (n - a + 1 + comp.first))
        total = total + boundary * weight
    return total


def sl_n_zeta_terms(c: Curve, n: int, sv: SpecialValues | None = None) -> list[RatFunc]:
    """The ``n`` summands (indexed by ``a = 1..n``) before the overall constant."""
    if n < 1:
        raise ValueError(f"rank must be at least 1, got {n}")
    sv = sv or special_values(c, n)
    zhat = artin_zeta(c)
    terms = []
    for a in range(1, n + 1):
        middle = zhat.scale_substitute(Fraction(c.q) ** (n - a))
        terms.append(left_sum(n, a, sv, c.q) * middle * right_sum(n, a, sv, c.q))
    return terms


def sl_n_zeta(c: Curve, n: int, sv: SpecialValues | None = None) -> RatFunc:
    """Rank-n zeta ``Ẑ_{X,n}(T)`` of a curve, in canonical form.

    Parameters
    ----------
    c : Curve
        The curve.
    n : int
        Rank, at least 1.
    sv : SpecialValues, optional
        Precomputed special values up to ``n``.

    Returns
    -------
    RatFunc
        ``q^(binom(n,2)(g-1))`` times the sum of :func:`sl_n_zeta_terms`.
    """
    total = RatFunc(0)
    for term in sl_n_zeta_terms(c, n, sv):
        total = total + term
    z = total * normalization_constant(c.q, c.g, n)
    logger.debug(f"Assembled rank-{n} zeta of {c.name}: {z}")
    return z


def verify_cancellation(z: RatFunc, n: int, q: int, g: int) -> bool:
    """True iff the denominator of ``z`` divides ``T^(g-1) (1-T)(1-QT)``, ``Q = q^n``.

    Any surviving factor ``(1 - q^j T)`` with ``0 < j < n`` makes this false, and
    so does a power of ``T`` above ``g - 1``.
    """
    k, rest = z.den.shift_down()
    if k > g - 1:
        return False
    target = Poly.linear(1, -1) * Poly.linear(1, -Fraction(q) ** n)
    return rest.divides(target)


def reconstruct_zeta(alpha: Sequence[Fraction], beta0: Fraction, n: int, g: int, q: int) -> RatFunc:
    """Rebuild the rank-n zeta from its invariants ``α(0..(g-1)n)`` and ``β(0)``.

    Returns the sum

        Σ_{m=0}^{g-2} α(mn) (T^(m-(g-1)) + Q^((g-1)-m) T^((g-1)-m))
          + α((g-1)n) + (Q-1) β(0) T / ((1-T)(1-QT)),

    whose first sum is empty for ``g = 1``.
    """
    if len(alpha) != g:
        raise ValueError(f"expected {g} alpha values, got {len(alpha)}")
    big_q = Fraction(q) ** n
    z = RatFunc(Fraction(alpha[g - 1]))
    for m in range(g - 1):
        z = z + RatFunc.monomial(m - (g - 1), Fraction(alpha[m]))
        z = z + RatFunc.monomial((g - 1) - m, Fraction(alpha[m]) * big_q ** ((g - 1) - m))
    tail = RatFunc(Poly.monomial(1, (big_q - 1) * Fraction(beta0)), zeta_denominator(q, 1, big_q))
    return z + tail


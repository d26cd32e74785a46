"""Exact rational functions in one variable.

A :class:`RatFunc` is always held in canonical form: numerator and
denominator are coprime and the denominator is monic, so structural equality
is mathematical equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from ..errors import HigherOrderPole, PoleAtOrigin, PoleEvaluation, ZeroDenominator
from .polynomial import Poly, Scalar, as_rational

Operand = Union["RatFunc", Poly, Scalar]


def normalize(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    """Reduce ``num/den`` to its canonical representative.

    Parameters
    ----------
    num : Poly
        Numerator.
    den : Poly
        Denominator, must be nonzero.

    Returns
    -------
    tuple[Poly, Poly]
        Coprime pair with monic denominator; the zero function is ``(0, 1)``.

    Raises
    ------
    ZeroDenominator
        If ``den`` is the zero polynomial.
    """
    if den.is_zero:
        raise ZeroDenominator("rational function with zero denominator")
    if num.is_zero:
        return Poly.zero(), Poly.one()
    g = Poly.gcd(num, den)
    if g.degree > 0:
        num, den = num // g, den // g
    lead = den.leading
    if lead != 1:
        num, den = num.scale(1 / lead), den.scale(1 / lead)
    return num, den


class RatFunc:
    """Rational function ``num(T)/den(T)`` over the rationals.

    Examples
    --------
    >>> RatFunc(Poly([-1, 0, 1]), Poly([-1, 1]))
    RatFunc((1 + 1*T) / (1))
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Union[Poly, Scalar], den: Union[Poly, Scalar] = 1):
        num = num if isinstance(num, Poly) else Poly.constant(num)
        den = den if isinstance(den, Poly) else Poly.constant(den)
        self.num, self.den = normalize(num, den)

    @classmethod
    def from_poly(cls, p: Poly) -> RatFunc:
        """Embed a polynomial."""
        return cls(p, Poly.one())

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> RatFunc:
        """Return ``c * T**k``; negative ``k`` is allowed."""
        if k >= 0:
            return cls(Poly.monomial(k, c))
        return cls(Poly.constant(c), Poly.monomial(-k))

    @classmethod
    def geometric(cls, c: Scalar) -> RatFunc:
        """Return ``1/(1 - c*T)``."""
        return cls(Poly.one(), Poly.linear(1, -as_rational(c)))

    # structure

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    @property
    def is_constant(self) -> bool:
        return self.is_polynomial and self.num.degree <= 0

    def constant_value(self) -> Fraction:
        """Value of a constant function; raises ValueError otherwise."""
        if not self.is_constant:
            raise ValueError(f"{self!r} is not constant")
        return self.num[0]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (Poly, int, Fraction)):
            return self == RatFunc._coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFunc(({self.num}) / ({self.den}))"

    # arithmetic

    @staticmethod
    def _coerce(other: Operand) -> RatFunc:
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc(Poly.constant(other))
        raise TypeError(f"cannot combine RatFunc with {type(other).__name__}")

    def __add__(self, other: Operand) -> RatFunc:
        o = self._coerce(other)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> RatFunc:
        return RatFunc(-self.num, self.den)

    def __sub__(self, other: Operand) -> RatFunc:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Operand) -> RatFunc:
        return self._coerce(other) - self

    def __mul__(self, other: Operand) -> RatFunc:
        o = self._coerce(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other: Operand) -> RatFunc:
        o = self._coerce(other)
        if o.is_zero:
            raise ZeroDenominator("division by the zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other: Operand) -> RatFunc:
        return self._coerce(other) / self

    def __pow__(self, k: int) -> RatFunc:
        if k < 0:
            return RatFunc.from_poly(Poly.one()) / (self ** (-k))
        return RatFunc(self.num**k, self.den**k)

    # substitutions

    def scale_substitute(self, c: Scalar) -> RatFunc:
        """Return ``f(c*T)``.

        ``c = 0`` gives the constant ``f(0)`` and raises
        :class:`PoleEvaluation` when ``f`` is singular at the origin.
        """
        c = as_rational(c)
        if c == 0:
            return RatFunc(self.evaluate(0))
        return RatFunc(self.num.substitute_scaled(c), self.den.substitute_scaled(c))

    def invert_substitute(self, q_big: Scalar) -> RatFunc:
        """Return ``f(1/(Q*T))``, the image under the functional-equation map."""
        q_big = as_rational(q_big)
        if q_big == 0:
            raise ValueError("invert_substitute needs Q != 0")
        if self.is_zero:
            return self
        d = max(self.num.degree, self.den.degree)
        return RatFunc(
            self.num.reversed_scaled(d, q_big), self.den.reversed_scaled(d, q_big)
        )

    # evaluation

    def __call__(self, x: Scalar) -> Fraction:
        return self.evaluate(x)

    def evaluate(self, x: Scalar) -> Fraction:
        """Exact value at a rational point.

        Raises
        ------
        PoleEvaluation
            If ``x`` is a pole.
        """
        x = as_rational(x)
        d = self.den.evaluate(x)
        if d == 0:
            raise PoleEvaluation(f"{self!r} has a pole at T={x}")
        return self.num.evaluate(x) / d

    def evaluate_mp(self, x):
        """Evaluate at an mpmath point; returns ``mpmath`` numbers."""
        d = self.den.evaluate_mp(x)
        if d == 0:
            raise PoleEvaluation(f"{self!r} has a pole at T={x}")
        return self.num.evaluate_mp(x) / d

    def residue_simple(self, x: Scalar) -> Fraction:
        """Return ``lim_{T->x} (T-x) f(T)`` at a pole of order at most one.

        Returns 0 when ``x`` is not a pole.

        Raises
        ------
        HigherOrderPole
            If ``(T-x)**2`` divides the canonical denominator.
        """
        x = as_rational(x)
        if self.den.evaluate(x) != 0:
            return Fraction(0)
        linear = Poly.linear(-x, 1)
        rest, rem = divmod(self.den, linear)
        assert rem.is_zero
        at_x = rest.evaluate(x)
        if at_x == 0:
            raise HigherOrderPole(f"pole of order >= 2 at T={x}")
        return self.num.evaluate(x) / at_x

    def pole_order(self, x: Scalar) -> int:
        """Multiplicity of ``x`` as a root of the canonical denominator."""
        x = as_rational(x)
        linear = Poly.linear(-x, 1)
        order, den = 0, self.den
        while den.degree > 0 and den.evaluate(x) == 0:
            den = den // linear
            order += 1
        return order

    def taylor_coefficients(self, k: int) -> list[Fraction]:
        """First ``k`` coefficients of the power series at ``T = 0``.

        Raises
        ------
        PoleAtOrigin
            If the function is singular at 0.
        """
        d0 = self.den[0]
        if d0 == 0:
            raise PoleAtOrigin(f"{self!r} is singular at T=0")
        out: list[Fraction] = []
        for i in range(k):
            acc = self.num[i]
            for j in range(1, min(i, self.den.degree) + 1):
                acc -= self.den[j] * out[i - j]
            out.append(acc / d0)
        return out

"""Dense univariate polynomials with exact rational coefficients.

Coefficients are stored lowest degree first, ``coeffs[i]`` being the
coefficient of ``T**i``; trailing zeros are stripped so the zero polynomial
is the empty tuple. Every instance is immutable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Union

import mpmath
import sympy

Scalar = Union[int, Fraction]

_T = sympy.Symbol("T")


def as_rational(value: Union[Scalar, str]) -> Fraction:
    """Convert ints, fractions and ``"p/q"`` strings to :class:`Fraction`.

    Floats are refused: a float has already been rounded.
    """
    if isinstance(value, float):
        raise TypeError(f"refusing inexact float {value!r}; pass an int, Fraction or string")
    return value if isinstance(value, Fraction) else Fraction(value)


class Poly:
    """Polynomial in one variable T over the rationals.

    Parameters
    ----------
    coeffs : Iterable[int | Fraction | str]
        Coefficients, constant term first.

    Examples
    --------
    >>> Poly([1, 0, 2])            # 1 + 2T²
    Poly(1 + 2*T^2)
    >>> Poly([1, 0, 2]).degree
    2
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Union[Scalar, str]] = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    # constructors

    @classmethod
    def zero(cls) -> Poly:
        """Return the zero polynomial."""
        return cls(())

    @classmethod
    def one(cls) -> Poly:
        """Return the constant polynomial 1."""
        return cls((1,))

    @classmethod
    def constant(cls, c: Scalar) -> Poly:
        """Return the constant polynomial ``c``."""
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> Poly:
        """Return ``c * T**k`` for ``k >= 0``."""
        if k < 0:
            raise ValueError(f"negative exponent {k} is not a polynomial")
        return cls([0] * k + [c])

    @classmethod
    def linear(cls, c0: Scalar, c1: Scalar) -> Poly:
        """Return ``c0 + c1*T``."""
        return cls((c0, c1))

    @classmethod
    def product(cls, factors: Iterable[Poly]) -> Poly:
        """Multiply an iterable of polynomials (empty product is 1)."""
        result = cls.one()
        for f in factors:
            result = result * f
        return result

    # structure

    @property
    def degree(self) -> int:
        """Degree of the polynomial, ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        if i < 0:
            raise IndexError("negative coefficient index")
        return self.coeffs[i] if i < len(self.coeffs) else Fraction(0)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(f"{c}")
            elif i == 1:
                terms.append(f"{c}*T")
            else:
                terms.append(f"{c}*T^{i}")
        return " + ".join(terms).replace("+ -", "- ")

    # arithmetic

    @staticmethod
    def _coerce(other: Union[Poly, Scalar]) -> Poly:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(other)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def __add__(self, other: Union[Poly, Scalar]) -> Poly:
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly(self[i] + o[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: Union[Poly, Scalar]) -> Poly:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> Poly:
        return self._coerce(other) - self

    def __mul__(self, other: Union[Poly, Scalar]) -> Poly:
        o = self._coerce(other)
        if self.is_zero or o.is_zero:
            return Poly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = Poly.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        """Euclidean division over the rationals."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lead
            if c == 0:
                continue
            quot[k - dq] = c
            for j, b in enumerate(other.coeffs):
                rem[k - dq + j] -= c * b
        return Poly(quot), Poly(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def divides(self, other: Poly) -> bool:
        """Return True if ``self`` divides ``other`` exactly."""
        return (other % self).is_zero

    def scale(self, c: Scalar) -> Poly:
        """Multiply every coefficient by ``c``."""
        c = as_rational(c)
        return Poly(a * c for a in self.coeffs)

    def monic(self) -> Poly:
        """Return the polynomial divided by its leading coefficient."""
        if self.is_zero:
            return self
        return self.scale(1 / self.leading)

    # evaluation and substitution

    def __call__(self, x: Scalar) -> Fraction:
        return self.evaluate(x)

    def evaluate(self, x: Scalar) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def substitute_scaled(self, c: Scalar) -> Poly:
        """Return ``p(c*T)``."""
        c = as_rational(c)
        power = Fraction(1)
        out = []
        for a in self.coeffs:
            out.append(a * power)
            power *= c
        return Poly(out)

    def reversed_scaled(self, d: int, c: Scalar) -> Poly:
        """Return ``(c*T)**d * p(1/(c*T))`` for ``d >= degree``.

        This is the numerator of ``p(1/(cT))`` over the denominator ``(cT)**d``.
        """
        if d < self.degree:
            raise ValueError(f"reversal degree {d} below polynomial degree {self.degree}")
        c = as_rational(c)
        out = [Fraction(0)] * (d + 1)
        for i, a in enumerate(self.coeffs):
            out[d - i] = a * c ** (d - i)
        return Poly(out)

    def derivative(self) -> Poly:
        """Formal derivative."""
        return Poly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def shift_down(self) -> tuple[int, Poly]:
        """Split ``p = T**k * r`` with ``r(0) != 0``; return ``(k, r)``."""
        k = 0
        while k < len(self.coeffs) and self.coeffs[k] == 0:
            k += 1
        return k, Poly(self.coeffs[k:])

    # sympy bridge

    def to_sympy(self) -> sympy.Poly:
        """The same polynomial as a ``sympy.Poly`` in ``T`` over ``QQ``."""
        coeffs = [sympy.Rational(c.numerator, c.denominator) for c in reversed(self.coeffs)]
        return sympy.Poly(coeffs or [0], _T, domain=sympy.QQ)

    @classmethod
    def from_sympy(cls, p: sympy.Poly) -> Poly:
        coeffs = [sympy.Rational(c) for c in reversed(p.all_coeffs())]
        return cls(Fraction(int(c.p), int(c.q)) for c in coeffs)

    @staticmethod
    def gcd(a: Poly, b: Poly) -> Poly:
        """Monic greatest common divisor over the rationals, computed by sympy.

        ``gcd(0, 0)`` is 0.
        """
        if a.is_zero and b.is_zero:
            return Poly.zero()
        return Poly.from_sympy(a.to_sympy().gcd(b.to_sympy())).monic()

    # numerics

    def mp_coefficients(self) -> list:
        """Coefficients as mpmath numbers at the current working precision."""
        return [to_mpf(c) for c in self.coeffs]

    def evaluate_mp(self, x):
        """Evaluate at an mpmath (real or complex) point by Horner's rule."""
        acc = mpmath.mpf(0)
        for c in reversed(self.coeffs):
            acc = acc * x + to_mpf(c)
        return acc


def to_mpf(value: Scalar):
    """Convert an exact rational to ``mpmath.mpf`` at the working precision."""
    value = as_rational(value)
    return mpmath.mpf(value.numerator) / value.denominator

"""Curve data: Weil numerators from point counts, traces or coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field

from ..errors import TraceOutOfRange, WeilViolation
from ..exact.polynomial import Poly, Scalar
from ..logger import logger
from ..models.run_settings import RunSettings
from ..rhcheck.roots import find_roots_adaptive, moduli_deviation


class Curve(BaseModel):
    """A smooth projective curve over F_q, described by its Weil numerator.

    Instances are built through :func:`curve_from_coefficients`,
    :func:`curve_from_point_counts` or :func:`synth_curve`, which run the
    validations; the model itself only stores the data.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str = Field(..., description="Identifier of the curve in the catalog.")
    q: int = Field(..., ge=2, description="Size of the base field.")
    g: int = Field(..., ge=1, description="Genus.")
    p: Poly = Field(..., description="Weil numerator P(t), constant term 1, degree 2g.")

    @property
    def p_coeffs(self) -> tuple[Fraction, ...]:
        return self.p.coeffs

    def __str__(self) -> str:
        return f"{self.name} (q={self.q}, g={self.g}, P={self.p})"


def is_prime_power(q: int) -> bool:
    """Return True if ``q = p**k`` for a prime ``p`` and ``k >= 1``."""
    if q < 2:
        return False
    p = 2
    while p * p <= q:
        if q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
        p += 1
    return True


def functional_equation_defects(p: Poly, q: Scalar, g: int) -> list[Fraction]:
    """Return ``c_{2g-i} - q**(g-i) * c_i`` for ``0 <= i <= 2g``."""
    q = Fraction(q)
    return [p[2 * g - i] - q ** (g - i) * p[i] for i in range(2 * g + 1)]


def _check_shape(name: str, p: Poly, q: int, g: int) -> None:
    if g < 1:
        raise WeilViolation(f"{name}: genus must be at least 1, got {g}")
    if p[0] != 1:
        raise WeilViolation(f"{name}: P(0) must be 1, got {p[0]}")
    if p.degree != 2 * g:
        raise WeilViolation(f"{name}: P has degree {p.degree}, expected {2 * g}")
    if any(functional_equation_defects(p, q, g)):
        raise WeilViolation(f"{name}: coefficients break the symmetry c_(2g-i) = q^(g-i) c_i")


def _check_field_size(name: str, q: int, settings: RunSettings) -> None:
    if is_prime_power(q):
        return
    if settings.reject_non_prime_power:
        raise WeilViolation(f"{name}: q={q} is not a prime power")
    logger.warning(f"{name}: q={q} is not a prime power; formulas are evaluated formally")


def check_root_moduli(name: str, p: Poly, q: int, settings: RunSettings) -> float:
    """Check numerically that every reciprocal root of ``P`` has modulus sqrt(q).

    Returns
    -------
    float
        The maximal relative deviation found.

    Raises
    ------
    WeilViolation
        If the deviation exceeds ``settings.weil_tolerance``.
    """
    roots, bits = find_roots_adaptive(p, settings)
    deviation = moduli_deviation(roots, q, bits, reciprocal=True)
    if deviation > settings.weil_tolerance:
        raise WeilViolation(
            f"{name}: reciprocal roots of P deviate from modulus sqrt({q}) by {deviation:.3e}"
        )
    return deviation


def curve_from_coefficients(
    name: str,
    q: int,
    g: int,
    coeffs: Sequence[Scalar | str],
    settings: Optional[RunSettings] = None,
) -> Curve:
    """Build a curve from the coefficients of its Weil numerator.

    Raises
    ------
    WeilViolation
        If the shape, the exact symmetry or the root moduli are wrong.
    """
    settings = settings or RunSettings()
    p = Poly(coeffs)
    _check_field_size(name, q, settings)
    _check_shape(name, p, q, g)
    check_root_moduli(name, p, q, settings)
    logger.debug(f"Validated curve {name}: P = {p}")
    return Curve(name=name, q=q, g=g, p=p)


def coefficients_from_power_sums(q: int, g: int, power_sums: Sequence[Scalar]) -> Poly:
    """Rebuild ``P`` from ``S_1..S_g`` with Newton's identities and the symmetry."""
    c: list[Fraction] = [Fraction(1)]
    for k in range(1, g + 1):
        acc = sum((Fraction(power_sums[i - 1]) * c[k - i] for i in range(1, k + 1)), Fraction(0))
        c.append(-acc / k)
    for k in range(g + 1, 2 * g + 1):
        c.append(Fraction(q) ** (k - g) * c[2 * g - k])
    return Poly(c)


def curve_from_point_counts(
    name: str,
    q: int,
    g: int,
    counts: Sequence[int],
    settings: Optional[RunSettings] = None,
) -> Curve:
    """Build a curve from ``N_1..N_g``, the point counts over F_{q^i}.

    The power sums ``S_i = q**i + 1 - N_i`` of the reciprocal roots give the
    first ``g`` coefficients of ``P``; the rest follow from the functional
    equation.

    Examples
    --------
    >>> curve_from_point_counts("E0", 2, 1, [3]).p
    Poly(1 + 2*T^2)
    """
    if len(counts) != g:
        raise WeilViolation(f"{name}: expected {g} point counts, got {len(counts)}")
    if any(n < 0 for n in counts):
        raise WeilViolation(f"{name}: point counts must be non-negative")
    sums = [q**i + 1 - n for i, n in enumerate(counts, start=1)]
    p = coefficients_from_power_sums(q, g, sums)
    return curve_from_coefficients(name, q, g, p.coeffs, settings)


def synth_curve(
    name: str,
    q: int,
    g: int,
    traces: Sequence[int],
    settings: Optional[RunSettings] = None,
) -> Curve:
    """Build ``P(t) = prod(1 - a_i t + q t²)``, Weil-valid by construction.

    Raises
    ------
    TraceOutOfRange
        If some ``a_i² > 4q``.
    """
    settings = settings or RunSettings()
    if len(traces) != g:
        raise ValueError(f"{name}: expected {g} traces, got {len(traces)}")
    for a in traces:
        if a * a > 4 * q:
            raise TraceOutOfRange(f"{name}: trace {a} violates a^2 <= 4q = {4 * q}")
    p = Poly.product(Poly((1, -a, q)) for a in traces)
    _check_field_size(name, q, settings)
    _check_shape(name, p, q, g)
    return Curve(name=name, q=q, g=g, p=p)


def power_sums(c: Curve, r_max: int) -> list[Fraction]:
    """Power sums ``S_1..S_{r_max}`` of the reciprocal roots of ``P``."""
    sums: list[Fraction] = []
    for r in range(1, r_max + 1):
        acc = r * c.p[r]
        for i in range(1, r):
            acc += sums[i - 1] * c.p[r - i]
        sums.append(-acc)
    return sums


def point_counts(c: Curve, r_max: int) -> list[int]:
    """Point counts ``N_r = q**r + 1 - S_r`` over F_{q^r}, for ``1 <= r <= r_max``."""
    out = []
    for r, s in enumerate(power_sums(c, r_max), start=1):
        n = c.q**r + 1 - s
        if n.denominator != 1:
            raise WeilViolation(f"{c.name}: non-integral point count {n} over F_(q^{r})")
        out.append(int(n))
    return out


def class_number(c: Curve) -> int:
    """Number of rational points of the Jacobian, ``P(1)``."""
    h = c.p.evaluate(1)
    if h.denominator != 1:
        raise WeilViolation(f"{c.name}: P(1) = {h} is not an integer")
    return int(h)

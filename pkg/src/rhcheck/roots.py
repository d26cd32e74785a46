"""Certified complex root finding for polynomials with rational coefficients.

Roots are computed by Aberth-Ehrlich simultaneous iteration in mpmath at a
fixed working precision. Each root is accepted only if its residual satisfies

    |p(z)| <= 2**(-bits/2) * ||p||_1 * max(1, |z|)**deg

and ``mpmath.polyroots`` is used as a fallback when the iteration stalls.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

import mpmath
from mpmath.libmp.libhyper import NoConvergence

from ..errors import NonConvergence
from ..exact.polynomial import Poly, Scalar, to_mpf
from ..logger import logger
from ..models.run_settings import RunSettings

# fixed angular offset of the starting circle, keeps runs reproducible
_START_OFFSET = mpmath.mpf(4) / 10


def _horner(cs: list, z):
    """Value and derivative of ``sum cs[i] z**i`` (``cs`` low to high)."""
    p = mpmath.mpc(0)
    dp = mpmath.mpc(0)
    for c in reversed(cs):
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _residual_bound(norm1, z, deg: int, bits: int):
    return mpmath.ldexp(norm1, -bits // 2) * max(mpmath.mpf(1), abs(z)) ** deg


def residuals(cs: list, roots: list) -> list:
    """Return ``|p(z)|`` for every root estimate."""
    return [abs(_horner(cs, z)[0]) for z in roots]


def _certified(cs: list, roots: list, bits: int) -> tuple[bool, list]:
    deg = len(cs) - 1
    norm1 = mpmath.fsum(abs(c) for c in cs)
    res = residuals(cs, roots)
    ok = all(r <= _residual_bound(norm1, z, deg, bits) for r, z in zip(res, roots))
    return ok, res


def _aberth(cs: list, max_iter: int) -> list:
    deg = len(cs) - 1
    radius = mpmath.root(abs(cs[0] / cs[-1]), deg)
    if radius == 0:
        radius = mpmath.mpf(1)
    z = [
        radius * mpmath.expj(2 * mpmath.pi * k / deg + _START_OFFSET) for k in range(deg)
    ]
    eps = mpmath.ldexp(mpmath.mpf(1), 3 - mpmath.mp.prec)
    for _ in range(max_iter):
        largest_step = mpmath.mpf(0)
        for i in range(deg):
            p, dp = _horner(cs, z[i])
            if p == 0:
                continue
            ratio = p / dp if dp != 0 else p
            s = mpmath.fsum(1 / (z[i] - z[j]) for j in range(deg) if j != i and z[i] != z[j])
            step = ratio / (1 - ratio * s)
            z[i] -= step
            largest_step = max(largest_step, abs(step) / max(mpmath.mpf(1), abs(z[i])))
        if largest_step <= eps:
            break
    return z


def _sorted(roots: list) -> list:
    return sorted(roots, key=lambda z: (float(mpmath.arg(z)) if z != 0 else 0.0, float(abs(z))))


def find_roots(p: Poly, precision_bits: int = 128, max_iter: int = 500) -> list:
    """Return all complex roots of ``p`` at the requested precision.

    Parameters
    ----------
    p : Poly
        Polynomial of degree at least one.
    precision_bits : int
        Working precision in bits.
    max_iter : int
        Iteration budget for the Aberth and fallback iterations.

    Returns
    -------
    list[mpmath.mpc]
        Roots with multiplicity, in a deterministic order.

    Raises
    ------
    NonConvergence
        If neither method certifies every root.
    """
    if p.degree < 1:
        raise ValueError("find_roots needs a polynomial of degree >= 1")
    zeros, core = p.shift_down()
    with mpmath.workprec(precision_bits):
        found = [mpmath.mpc(0)] * zeros
        if core.degree == 0:
            return found
        cs = core.mp_coefficients()
        if core.degree == 1:
            return _sorted(found + [mpmath.mpc(-cs[0] / cs[1])])

        roots = _aberth(cs, max_iter)
        ok, res = _certified(cs, roots, precision_bits)
        if not ok:
            logger.debug(f"Aberth residuals not certified at {precision_bits} bits, trying polyroots")
            try:
                roots = list(
                    mpmath.polyroots(
                        list(reversed(cs)), maxsteps=max_iter, extraprec=precision_bits
                    )
                )
                roots = [mpmath.mpc(z) for z in roots]
                ok, res = _certified(cs, roots, precision_bits)
            except NoConvergence:
                ok = False
        if not ok:
            raise NonConvergence(
                f"roots of {p} not certified at {precision_bits} bits",
                residuals=[float(r) for r in res],
                precision_bits=precision_bits,
            )
        return _sorted(found + roots)


def find_roots_adaptive(p: Poly, settings: Optional[RunSettings] = None) -> tuple[list, int]:
    """Run :func:`find_roots`, doubling the precision on failure.

    Returns
    -------
    tuple[list, int]
        The roots and the precision in bits at which they were certified.
    """
    settings = settings or RunSettings()
    bits = settings.precision_bits
    while True:
        try:
            return find_roots(p, bits, settings.max_iter), bits
        except NonConvergence as exc:
            if bits * 2 > settings.max_precision_bits:
                raise
            logger.debug(f"{exc}; doubling precision to {bits * 2} bits")
            bits *= 2


def moduli_deviation(roots: list, target_sq: Scalar, bits: int, reciprocal: bool = False) -> float:
    """Largest relative deviation of ``|z|`` (or ``|1/z|``) from ``sqrt(target_sq)``.

    A zero root examined through its reciprocal counts as an infinite deviation.
    """
    with mpmath.workprec(bits):
        target = mpmath.sqrt(to_mpf(Fraction(target_sq)))
        worst = mpmath.mpf(0)
        for z in roots:
            if reciprocal and z == 0:
                return float("inf")
            modulus = 1 / abs(z) if reciprocal else abs(z)
            worst = max(worst, abs(modulus - target) / target)
        return float(worst)

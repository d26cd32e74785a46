"""Riemann-hypothesis verdicts for zeta numerators."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Optional

import mpmath
from pydantic import BaseModel, ConfigDict, Field

from ..exact.polynomial import Poly, to_mpf
from ..highrank.bundle import ZetaBundle
from ..logger import logger
from ..models.run_settings import RunSettings
from .roots import find_roots_adaptive


class RhVerdict(BaseModel):
    """Reciprocal roots of a numerator compared against a target modulus."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    roots: list[Any] = Field(..., description="Reciprocal roots ω = 1/T, as mpmath.mpc.")
    moduli: list[Any] = Field(..., description="|ω| for every root.")
    target: Any = Field(..., description="The expected modulus.")
    deviations: list[float] = Field(..., description="| |ω| - target | / target per root.")
    max_rel_deviation: float
    tolerance: float
    holds: bool
    s_lines: list[float] = Field(..., description="Re(s) = -log|T| / (n log q) per root.")
    pairing_defect: float = Field(..., description="max_i min_j |ω_j - Q/ω_i| / sqrt(Q).")
    conjugate_defect: float = Field(..., description="max_i min_j |ω_j - conj(ω_i)| / |ω_i|.")
    precision_bits: int


def _pairing_defect(omegas: list, big_q, scale) -> Any:
    worst = mpmath.mpf(0)
    for w in omegas:
        partner = big_q / w
        worst = max(worst, min(abs(v - partner) for v in omegas) / scale)
    return worst


def _conjugate_defect(omegas: list) -> Any:
    worst = mpmath.mpf(0)
    for w in omegas:
        worst = max(worst, min(abs(v - mpmath.conj(w)) for v in omegas) / abs(w))
    return worst


def circle_verdict(
    p: Poly,
    target_sq: Fraction,
    n: int,
    q: int,
    pair_q: Fraction,
    settings: Optional[RunSettings] = None,
) -> RhVerdict:
    """Compare the reciprocal roots of ``p`` with the circle ``|ω| = sqrt(target_sq)``.

    Parameters
    ----------
    p : Poly
        Numerator in ``T = q^(-ns)``.
    target_sq : Fraction
        Square of the expected modulus of the reciprocal roots.
    n, q : int
        Rank and field size, used for the ``Re(s)`` lines.
    pair_q : Fraction
        The constant ``Q`` of the functional-equation pairing ``ω -> Q/ω``.
    settings : RunSettings, optional
        Precision and tolerance.
    """
    settings = settings or RunSettings()
    roots, bits = find_roots_adaptive(p, settings)
    with mpmath.workprec(bits):
        target = mpmath.sqrt(to_mpf(target_sq))
        log_q = mpmath.log(q)
        omegas, moduli, deviations, lines = [], [], [], []
        for t in roots:
            if t == 0:
                # a root at T = 0 has no finite reciprocal
                deviations.append(float("inf"))
                lines.append(float("inf"))
                continue
            w = 1 / t
            omegas.append(w)
            moduli.append(abs(w))
            deviations.append(float(abs(abs(w) - target) / target))
            lines.append(float(-mpmath.log(abs(t)) / (n * log_q)))
        scale = mpmath.sqrt(to_mpf(pair_q))
        pairing = float(_pairing_defect(omegas, to_mpf(pair_q), scale)) if omegas else 0.0
        conjugate = float(_conjugate_defect(omegas)) if omegas else 0.0
    worst = max(deviations) if deviations else 0.0
    return RhVerdict(
        roots=omegas,
        moduli=moduli,
        target=target,
        deviations=deviations,
        max_rel_deviation=worst,
        tolerance=settings.tolerance,
        holds=worst <= settings.tolerance,
        s_lines=lines,
        pairing_defect=pairing,
        conjugate_defect=conjugate,
        precision_bits=bits,
    )


def rh_verdict(b: ZetaBundle, settings: Optional[RunSettings] = None) -> RhVerdict:
    """Check that every reciprocal root of ``P_{X,n}`` has modulus ``Q^(1/2)``.

    A false verdict is returned, never raised.
    """
    verdict = circle_verdict(b.numerator, b.big_q, b.n, b.q, b.big_q, settings)
    logger.info(
        f"{b.curve.name}: rank-{b.n} RH {'holds' if verdict.holds else 'FAILS'} "
        f"(max deviation {verdict.max_rel_deviation:.3e} at {verdict.precision_bits} bits)"
    )
    return verdict


def product_identity(b: ZetaBundle) -> bool:
    """Exact check that the reciprocal roots multiply to ``Q^g``."""
    return b.numerator.leading / b.numerator[0] == b.big_q**b.g

"""Conversion of computed objects into report models, and the JSON/CSV writers."""

from __future__ import annotations

import math
from importlib import metadata
from pathlib import Path
from typing import Iterable, Optional

import mpmath
import numpy as np
import pandas as pd

from ..curve.artin import SpecialValues
from ..curve.curve import Curve, class_number, point_counts
from ..exact.ratfunc import RatFunc
from ..highrank.bundle import PoleReport, ZetaBundle
from ..logger import logger
from ..models.report import (
    CommandOutput,
    CurveOut,
    PoleOut,
    RootOut,
    RunMetadata,
    VerdictOut,
    ZetaOut,
)
from ..models.run_settings import RunSettings
from ..rhcheck.verdict import RhVerdict

_PACKAGES = ("nonabelian-zeta", "mpmath", "numpy", "pandas", "pydantic")


def rationals(values: Iterable) -> list[str]:
    return [str(v) for v in values]


def ratfunc_text(f: RatFunc) -> str:
    return f"({f.num}) / ({f.den})"


def decimal(x, bits: int) -> str:
    """Decimal string carrying the significant digits of ``bits`` mantissa bits."""
    return mpmath.nstr(x, max(int(bits * math.log10(2)), 15))


def run_metadata(settings: RunSettings) -> RunMetadata:
    versions = {}
    for name in _PACKAGES:
        try:
            versions[name] = metadata.version(name)
        except metadata.PackageNotFoundError:
            versions[name] = "unknown"
    return RunMetadata(
        precision_bits=settings.precision_bits,
        tolerance=settings.tolerance,
        samples=settings.samples,
        seed=settings.seed,
        versions=versions,
    )


def curve_out(c: Curve, sv: SpecialValues) -> CurveOut:
    return CurveOut(
        name=c.name,
        q=c.q,
        g=c.g,
        p_coefficients=rationals(c.p_coeffs),
        point_counts=point_counts(c, max(c.g, 3)),
        class_number=class_number(c),
        zeta_at=rationals(sv.zeta_at),
        nu_hat=rationals(sv.nu_hat),
    )


def pole_out(p: PoleReport) -> PoleOut:
    return PoleOut(
        order_at_one=p.order_at_one,
        order_at_inverse_q=p.order_at_inverse_q,
        order_at_zero=p.order_at_zero,
        extra_pole_degree=p.extra_pole_degree,
        residue_at_one=str(p.residue_at_one),
        residue_at_inverse_q=str(p.residue_at_inverse_q),
        ok=p.ok,
    )


def zeta_out(b: ZetaBundle, poles: PoleReport) -> ZetaOut:
    return ZetaOut(
        curve=b.curve.name,
        n=b.n,
        big_q=str(b.big_q),
        constant=str(b.constant),
        numerator=rationals(b.numerator.coeffs),
        alpha=rationals(b.alpha),
        beta0=str(b.beta0),
        poles=pole_out(poles),
    )


def verdict_out(
    v: RhVerdict, curve: str, n: int, polynomial: str, product_identity: Optional[bool] = None
) -> VerdictOut:
    bits = v.precision_bits
    deviations = [d for d in v.deviations if math.isfinite(d)]
    lines = [s for s in v.s_lines if math.isfinite(s)]
    roots = [
        RootOut(
            re=decimal(mpmath.re(w), bits),
            im=decimal(mpmath.im(w), bits),
            modulus=decimal(m, bits),
            deviation=d,
            re_s=s,
        )
        for w, m, d, s in zip(v.roots, v.moduli, deviations, lines)
    ]
    return VerdictOut(
        curve=curve,
        n=n,
        polynomial=polynomial,
        target=decimal(v.target, bits),
        roots=roots,
        max_rel_deviation=v.max_rel_deviation,
        tolerance=v.tolerance,
        holds=v.holds,
        pairing_defect=v.pairing_defect,
        conjugate_defect=v.conjugate_defect,
        precision_bits=bits,
        product_identity=product_identity,
    )


def zero_scatter(verdicts: Iterable[VerdictOut]) -> pd.DataFrame:
    """Plot-ready table with one row per reciprocal root."""
    rows = [
        {
            "curve": v.curve,
            "n": v.n,
            "polynomial": v.polynomial,
            "root_re": float(r.re),
            "root_im": float(r.im),
            "modulus": float(r.modulus),
            "re_s": r.re_s,
        }
        for v in verdicts
        for r in v.roots
    ]
    columns = ["curve", "n", "polynomial", "root_re", "root_im", "modulus", "re_s"]
    df_ = pd.DataFrame(rows, columns=columns)
    if not df_.empty:
        df_["arg"] = np.arctan2(df_["root_im"], df_["root_re"])
    return df_


def collect_verdicts(output: CommandOutput) -> list[VerdictOut]:
    """Every :class:`VerdictOut` reachable from the results of a command."""
    found: list[VerdictOut] = []

    def walk(obj) -> None:
        if isinstance(obj, VerdictOut):
            found.append(obj)
        elif isinstance(obj, list):
            for item in obj:
                walk(item)
        elif hasattr(obj, "__pydantic_fields__"):
            for name in type(obj).model_fields:
                walk(getattr(obj, name))

    walk(output.results)
    return found


def write_json(output: CommandOutput, out: Optional[Path]) -> None:
    """Write the report to ``out``, or to stdout when ``out`` is None."""
    text = output.model_dump_json(indent=2)
    if out is None:
        print(text)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text + "\n", encoding="utf-8")
    logger.info(f"Report written to {out}")


def write_csv(output: CommandOutput, path: Path) -> None:
    df_ = zero_scatter(collect_verdicts(output))
    path.parent.mkdir(parents=True, exist_ok=True)
    df_.to_csv(path, index=False, float_format="%.17g")
    logger.info(f"Zero-scatter table with {len(df_)} row(s) written to {path}")

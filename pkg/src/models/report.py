"""Serializable report schemas.

Exact rationals are written as ``"p/q"`` (or ``"p"``) strings so a parsed
report reproduces them bit for bit; mpmath numbers are decimal strings.
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from ..ranklow.rank2 import SweepReport
from ..ranklow.rank3 import NuRatioReport, DiscReport, HalfPlaneVerdict
from ..ranklow.ratios import PredicateReport
from ..rhcheck.bounds import BoundsReport


class RootOut(BaseModel):
    re: str = Field(..., description="Real part of the reciprocal root ω.")
    im: str = Field(..., description="Imaginary part of ω.")
    modulus: str
    deviation: float = Field(..., description="Relative deviation of |ω| from the target.")
    re_s: float = Field(..., description="Re(s) of the corresponding zero.")


class VerdictOut(BaseModel):
    curve: str
    n: int
    polynomial: str = Field(..., description="Which numerator was tested: 'rank' or 'upper_half'.")
    target: str = Field(..., description="Expected modulus of the reciprocal roots.")
    roots: List[RootOut]
    max_rel_deviation: float
    tolerance: float
    holds: bool
    pairing_defect: float
    conjugate_defect: float
    precision_bits: int
    product_identity: Optional[bool] = Field(
        None, description="Exact check that the reciprocal roots multiply to Q^g."
    )


class PoleOut(BaseModel):
    order_at_one: int
    order_at_inverse_q: int
    order_at_zero: int
    extra_pole_degree: int
    residue_at_one: str
    residue_at_inverse_q: str
    ok: bool


class ZetaOut(BaseModel):
    curve: str
    n: int
    big_q: str
    constant: str = Field(..., description="q^(binom(n,2)(g-1)).")
    numerator: List[str] = Field(..., description="Coefficients of P_{X,n}(T), constant term first.")
    alpha: List[str] = Field(..., description="α(mn) for m = 0..g-1.")
    beta0: str
    poles: PoleOut


class InvariantsOut(BaseModel):
    curve: str
    n: int
    alpha: List[str]
    beta0: str
    beta_routes: Dict[str, str]
    routes_agree: bool
    alpha_zero_closed: str
    beta_relation: bool = Field(..., description="β(mn) = β(0) for small |m| and β(0) = residue.")
    alpha_large: Dict[str, str] = Field(..., description="α(mn) in the vanishing range, keyed by m.")


class MiracleOut(BaseModel):
    curve: str
    n: int = Field(..., description="Rank whose α(0) is compared with β(0) of rank n-1.")
    holds: bool


class IdentityOut(BaseModel):
    """Outcome of one exact identity for one (curve, rank)."""

    curve: str
    n: int
    identity: str
    holds: bool


class CurveOut(BaseModel):
    name: str
    q: int
    g: int
    p_coefficients: List[str]
    point_counts: List[int] = Field(..., description="N_1, ..., N_max(g,3).")
    class_number: int
    zeta_at: List[str] = Field(..., description="ζ̂(1), ζ̂(2), ...")
    nu_hat: List[str]


class RatioFunctionsOut(BaseModel):
    a: int
    f: str
    g: str
    r: Optional[str] = Field(None, description="f_a g_a / (f_(a+1) g_(a+1)); absent for a = n.")


class Rank3Out(BaseModel):
    curve: str
    z_ge2: str = Field(..., description="z2/2 + z3 as num/den.")
    third_line: VerdictOut
    half_plane: HalfPlaneVerdict
    nu_ratio: NuRatioReport
    disc: DiscReport
    zeta_ratio: List[PredicateReport]
    shift_ratio: List[PredicateReport]
    ratio_functions: List[RatioFunctionsOut]


class RankOut(BaseModel):
    zeta: ZetaOut
    invariants: InvariantsOut
    miracle: Optional[MiracleOut] = None
    rh: VerdictOut
    bounds: List[BoundsReport]


class CurveReport(BaseModel):
    curve: CurveOut
    ranks: List[RankOut]
    rank3: Optional[Rank3Out] = None


class RunMetadata(BaseModel):
    precision_bits: int
    tolerance: float
    samples: int
    seed: int
    versions: Dict[str, str] = Field(..., description="Versions of the package and its numeric stack.")


class CommandOutput(BaseModel):
    """Envelope written by every command."""

    command: str
    metadata: RunMetadata
    results: List[Any] = Field(default_factory=list)
    sweeps: List[SweepReport] = Field(default_factory=list)
    ingestion_errors: List[str] = Field(default_factory=list)
    identity_failures: List[str] = Field(
        default_factory=list, description="Exact identities that came out false."
    )

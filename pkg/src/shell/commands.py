"""The commands of the command line tool.

Every command takes validated curves and returns a :class:`CommandOutput`.
Numeric verdicts that come out false are recorded as data; exact identities
that fail are listed in ``identity_failures`` so the caller can exit nonzero.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import pandas as pd

from ..curve.artin import special_values
from ..curve.curve import Curve
from ..highrank.assembly import reconstruct_zeta, verify_cancellation
from ..highrank.bundle import ZetaBundle, bundle, pole_report
from ..invariants.beta import alpha_zero_closed, beta_routes
from ..invariants.miracle import alpha_large, beta_relation_check, counting_miracle_check
from ..logger import logger
from ..models.report import (
    CommandOutput,
    CurveOut,
    CurveReport,
    IdentityOut,
    InvariantsOut,
    MiracleOut,
    Rank3Out,
    RankOut,
    RatioFunctionsOut,
    VerdictOut,
    ZetaOut,
)
from ..models.run_settings import RunSettings
from ..ranklow.rank2 import SweepReport, rank2_constant, sublemma_grid, yoshida_sweep
from ..ranklow.rank3 import disc_condition, half_plane_verdict, nu_ratio_check, rank3_parts, rh_third_line
from ..ranklow.ratios import fg_ratio_functions, r_ratio_function, shift_ratio_predicate, zeta_ratio_predicate
from ..ranklow.sampling import curve_rng
from ..rhcheck.bounds import BoundsReport, check_beta_bounds, check_beta_prime_bounds, check_rough_bounds
from ..rhcheck.verdict import product_identity, rh_verdict
from .report import curve_out, ratfunc_text, run_metadata, verdict_out, zeta_out

COMMANDS = ("artin", "zeta", "invariants", "rh", "bounds", "miracle", "rank3", "check", "report")


class Runner:
    """Runs commands over a list of curves with fixed settings.

    Parameters
    ----------
    settings : RunSettings
        Precision, tolerance and sampling parameters.
    """

    def __init__(self, settings: RunSettings):
        self.settings = settings
        self.failures: list[str] = []
        self._bundles: dict[tuple[str, int], ZetaBundle] = {}

    def _bundle(self, c: Curve, n: int) -> ZetaBundle:
        key = (c.name, n)
        if key not in self._bundles:
            self._bundles[key] = bundle(c, n)
        return self._bundles[key]

    def _fail(self, message: str) -> None:
        logger.error(message)
        self.failures.append(message)

    def _output(self, command: str, results: list, sweeps: Sequence[SweepReport] = ()) -> CommandOutput:
        return CommandOutput(
            command=command,
            metadata=run_metadata(self.settings),
            results=results,
            sweeps=list(sweeps),
            identity_failures=list(self.failures),
        )

    # per-curve sections

    def artin(self, c: Curve) -> CurveOut:
        return curve_out(c, special_values(c, 3))

    def zeta(self, c: Curve, n: int) -> ZetaOut:
        b = self._bundle(c, n)
        poles = pole_report(b.zhat, b.big_q)
        if not poles.ok:
            self._fail(f"{c.name}: rank-{n} pole structure is wrong: {poles}")
        if n == 2:
            rank2_constant(c, b.zhat)
        return zeta_out(b, poles)

    def invariants(self, c: Curve, n: int) -> InvariantsOut:
        b = self._bundle(c, n)
        routes = beta_routes(c, n, b)
        if not routes.agree:
            self._fail(f"{c.name}: rank-{n} β(0) routes disagree: {routes}")
        relation = beta_relation_check(c, n, b)
        if not relation:
            self._fail(f"{c.name}: rank-{n} β(mn) differs from β(0)")
        large = {str(m): str(alpha_large(c, n, m, b)) for m in (2 * c.g - 1, 2 * c.g)}
        return InvariantsOut(
            curve=c.name,
            n=n,
            alpha=[str(a) for a in b.alpha],
            beta0=str(b.beta0),
            beta_routes={k: str(v) for k, v in routes.model_dump().items()},
            routes_agree=routes.agree,
            alpha_zero_closed=str(alpha_zero_closed(c, n)),
            beta_relation=relation,
            alpha_large=large,
        )

    def rh(self, c: Curve, n: int) -> VerdictOut:
        b = self._bundle(c, n)
        identity = product_identity(b)
        if not identity:
            self._fail(f"{c.name}: rank-{n} reciprocal roots do not multiply to Q^g")
        return verdict_out(rh_verdict(b, self.settings), c.name, n, "rank", identity)

    def bounds(self, c: Curve, n: int) -> list[BoundsReport]:
        """The three bound families; the RH-conditional ones carry the rank-n RH verdict."""
        b = self._bundle(c, n)
        bits = self.settings.precision_bits
        reports = [check_rough_bounds(b, bits), check_beta_prime_bounds(b, bits), check_beta_bounds(b, bits)]
        holds = rh_verdict(b, self.settings).holds
        if not holds:
            logger.warning(f"{c.name}: RH fails at rank {n}; the conditional bounds prove nothing here")
        reports = [r.model_copy(update={"rh_holds": holds}) if r.assumes_rh else r for r in reports]
        for r in reports:
            if not r.passed:
                logger.warning(f"{c.name}: rank-{n} {r.family} bounds have a failing check")
        return reports

    def miracle_at(self, c: Curve, n: int) -> MiracleOut:
        holds = counting_miracle_check(c, n, self._bundle(c, n))
        if not holds:
            self._fail(f"{c.name}: counting miracle fails at rank {n}")
        return MiracleOut(curve=c.name, n=n, holds=holds)

    def miracle(self, c: Curve, max_rank: int) -> list[MiracleOut]:
        """Link rank ``m`` to rank ``m + 1`` for ``m = 1..max_rank``."""
        return [self.miracle_at(c, m + 1) for m in range(1, max_rank + 1)]

    def check(self, c: Curve, n: int) -> list[IdentityOut]:
        """Every exact identity of the rank-n zeta, as one row each."""
        b = self._bundle(c, n)
        z = b.zhat
        rows = {
            "functional_equation": z.invert_substitute(b.big_q) == z,
            "cancellation": verify_cancellation(z, n, c.q, c.g),
            "reconstruction": reconstruct_zeta(b.alpha, b.beta0, n, c.g, c.q) == z,
            "beta_routes": beta_routes(c, n, b).agree,
            "beta_relation": beta_relation_check(c, n, b),
            "product_identity": product_identity(b),
        }
        if n >= 2:
            rows["counting_miracle"] = counting_miracle_check(c, n, b)
        for name, holds in rows.items():
            if not holds:
                self._fail(f"{c.name}: rank-{n} {name} identity fails")
        return [IdentityOut(curve=c.name, n=n, identity=k, holds=v) for k, v in rows.items()]

    def rank3(self, c: Curve) -> Rank3Out:
        parts = rank3_parts(c)
        third = rh_third_line(parts, self.settings)
        s = self.settings
        functions = []
        for a in range(1, 4):
            f, g = fg_ratio_functions(c, 3, a)
            r = ratfunc_text(r_ratio_function(c, 3, a)) if a < 3 else None
            functions.append(RatioFunctionsOut(a=a, f=ratfunc_text(f), g=ratfunc_text(g), r=r))
        return Rank3Out(
            curve=c.name,
            z_ge2=ratfunc_text(parts.z_ge2),
            third_line=verdict_out(third, c.name, 3, "upper_half"),
            half_plane=half_plane_verdict(c, s),
            nu_ratio=nu_ratio_check(c),
            disc=disc_condition(c),
            zeta_ratio=[zeta_ratio_predicate(c, 3, a, s.samples, s.seed, s) for a in range(1, 4)],
            shift_ratio=[shift_ratio_predicate(c, 3, a, s.samples, s.seed, s) for a in range(1, 3)],
            ratio_functions=functions,
        )

    def sweeps(self) -> list[SweepReport]:
        rng = curve_rng(self.settings.seed, "sweeps")
        return [yoshida_sweep(self.settings.samples, rng), sublemma_grid()]

    def full(self, c: Curve, ranks: Iterable[int]) -> CurveReport:
        ranks = list(ranks)
        sections = []
        for n in ranks:
            miracle = self.miracle_at(c, n) if n >= 2 else None
            sections.append(
                RankOut(
                    zeta=self.zeta(c, n),
                    invariants=self.invariants(c, n),
                    miracle=miracle,
                    rh=self.rh(c, n),
                    bounds=self.bounds(c, n),
                )
            )
        rank3 = self.rank3(c) if 3 in ranks else None
        return CurveReport(curve=self.artin(c), ranks=sections, rank3=rank3)

    # commands

    def run(self, command: str, curves: Sequence[Curve], ranks: Sequence[int], max_rank: int) -> CommandOutput:
        """Dispatch ``command`` over ``curves``; ``ranks`` is ignored by rank-free commands."""
        if command not in COMMANDS:
            raise ValueError(f"unknown command {command!r}")
        logger.info(f"Running {command} on {len(curves)} curve(s)")
        if command == "check":
            results = [row for c in curves for n in ranks for row in self.check(c, n)]
            table = pd.DataFrame([r.model_dump() for r in results], columns=["curve", "n", "identity", "holds"])
            if not table.empty:
                summary = table.groupby(["curve", "n", "identity"])["holds"].all().unstack("identity")
                logger.info(f"Exact identities:\n{summary.to_string()}")
            return self._output(command, results, self.sweeps())
        if command == "report":
            results = [self.full(c, ranks) for c in curves]
            return self._output(command, results, self.sweeps())
        results: list = []
        for c in curves:
            if command == "artin":
                results.append(self.artin(c))
            elif command == "miracle":
                results.extend(self.miracle(c, max_rank))
            elif command == "rank3":
                results.append(self.rank3(c))
            else:
                section = getattr(self, command)
                for n in ranks:
                    item = section(c, n)
                    results.extend(item if isinstance(item, list) else [item])
        return self._output(command, results)

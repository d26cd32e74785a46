"""Exception hierarchy shared by every module of the package.

Errors that subclass :class:`StructuralError` mean the exact mathematics
disagrees with itself (a transcription bug); the command line maps them to a
nonzero exit code. Numeric verdicts that come out false are never raised.
"""

from __future__ import annotations

from typing import Sequence


class ZetaError(Exception):
    """Root of all errors raised by the package."""


class StructuralError(ZetaError):
    """An exact identity failed."""


# exact


class ZeroDenominator(ZetaError, ZeroDivisionError):
    """A rational function was built with the zero polynomial as denominator."""


class PoleEvaluation(ZetaError, ZeroDivisionError):
    """A rational function was evaluated at one of its poles."""


class HigherOrderPole(ZetaError, ArithmeticError):
    """A simple-pole residue was requested at a pole of order at least two."""


class PoleAtOrigin(ZetaError, ArithmeticError):
    """A power series at T=0 was requested for a function singular at 0."""


# curve


class WeilViolation(ZetaError, ValueError):
    """Curve data failed the Weil symmetry or root-modulus validation."""


class TraceOutOfRange(ZetaError, ValueError):
    """A Frobenius trace a with a² > 4q was supplied."""


# highrank / ranklow / invariants


class StructureViolation(StructuralError):
    """An assembled zeta function does not have the shape it must have."""


class NonIntegralExponent(StructuralError):
    """A summed fractional-part exponent in the beta formula is not an integer."""


# rhcheck


class NonConvergence(StructuralError):
    """The root finder did not certify every root within its iteration budget.

    Parameters
    ----------
    message : str
        Human readable description.
    residuals : Sequence[float]
        The residual bound reached for every root at the last iteration.
    precision_bits : int
        Working precision of the failed attempt.
    """

    def __init__(self, message: str, residuals: Sequence[float] = (), precision_bits: int = 0):
        super().__init__(message)
        self.residuals = list(residuals)
        self.precision_bits = precision_bits


# ranklow


class DomainViolation(ZetaError, ValueError):
    """Inputs to an inequality predicate fall outside its hypotheses."""


class SampleAtPole(ZetaError, ArithmeticError):
    """A sampled point hits a pole (or threshold) of a predicate and is skipped."""


# shell


class CatalogParseError(ZetaError, ValueError):
    """The catalog file is not valid JSON.

    Parameters
    ----------
    message : str
        Parser message.
    line : int
        1-based line of the failure.
    column : int
        1-based column of the failure.
    """

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class EntryError(ZetaError, ValueError):
    """A single catalog entry could not be turned into a valid curve."""

    def __init__(self, name: str, reason: str):
        super().__init__(f"{name}: {reason}")
        self.name = name
        self.reason = reason

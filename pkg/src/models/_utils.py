from enum import Enum


class Outcome(str, Enum):
    """Verdict of an inequality evaluated in interval arithmetic."""

    PASS = "pass"
    FAIL = "fail"
    INDETERMINATE = "indeterminate"


class Ordering(str, Enum):
    """Three-way comparison result."""

    LT = "LT"
    EQ = "EQ"
    GT = "GT"


class EmitFormat(str, Enum):
    """Output formats accepted by ``--emit``."""

    JSON = "json"
    CSV = "csv"
    BOTH = "both"

"""Numeric run settings shared by every command."""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class RunSettings(BaseSettings):
    """Precision, tolerances and sampling parameters of a run.

    Values are read from ``ZETA_*`` environment variables or a local ``.env``
    file; command line flags override them through :meth:`with_overrides`.
    """

    model_config = SettingsConfigDict(
        env_prefix="ZETA_", env_file=".env", env_file_encoding="utf-8", extra="ignore"
    )

    precision_bits: int = Field(
        default=128, ge=32, description="Initial working precision of the root finder, in bits."
    )
    max_precision_bits: int = Field(
        default=1024, ge=32, description="Ceiling for precision doubling on non-convergence."
    )
    tolerance: float = Field(
        default=1e-9, gt=0, description="Relative tolerance of root-modulus verdicts."
    )
    max_iter: int = Field(default=500, ge=1, description="Aberth iteration budget per attempt.")
    samples: int = Field(default=1000, ge=1, description="Samples per side for predicate sweeps.")
    seed: int = Field(default=0, ge=0, description="Seed of the sampling generators.")
    weil_tolerance: float = Field(
        default=1e-9, gt=0, description="Relative tolerance of the Weil root-modulus check."
    )
    reject_non_prime_power: bool = Field(
        default=False, description="Reject curves whose q is not a prime power instead of warning."
    )

    def with_overrides(self, **overrides) -> "RunSettings":
        """Return a copy with every non-None override applied."""
        update = {k: v for k, v in overrides.items() if v is not None}
        return self.model_copy(update=update)

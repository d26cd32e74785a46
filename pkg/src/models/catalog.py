from typing import List, Optional

from pydantic import BaseModel, Field, model_validator


class CatalogEntry(BaseModel):
    """One curve of a catalog file, given by point counts or by the coefficients of P."""

    name: str = Field(..., min_length=1, description="Unique identifier of the curve.")
    q: int = Field(..., ge=2, description="Size of the base field.")
    g: int = Field(..., ge=1, description="Genus of the curve.")
    point_counts: Optional[List[int]] = Field(
        None, description="N_1, ..., N_g: rational points over F_q, ..., F_(q^g)."
    )
    p_coefficients: Optional[List[str]] = Field(
        None,
        description="Coefficients of P(t) from the constant term up, as integer or ratio strings.",
    )

    @model_validator(mode="after")
    def _needs_data(self) -> "CatalogEntry":
        if self.point_counts is None and self.p_coefficients is None:
            raise ValueError("either point_counts or p_coefficients is required")
        return self


class CatalogFile(BaseModel):
    """Schema of a catalog JSON file: ``{"curves": [...]}``."""

    curves: List[dict] = Field(
        default_factory=list,
        description="Raw entries; each is validated on its own so one bad entry does not hide the rest.",
    )

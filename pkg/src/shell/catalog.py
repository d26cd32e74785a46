"""Loading curve catalogs from JSON."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from ..curve.curve import Curve, curve_from_coefficients, curve_from_point_counts, point_counts
from ..errors import CatalogParseError, EntryError, ZetaError
from ..logger import logger
from ..models.catalog import CatalogEntry, CatalogFile
from ..models.run_settings import RunSettings


class Catalog(BaseModel):
    """Validated curves of a catalog file and the entries that were rejected."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    curves: list[Curve] = Field(default_factory=list)
    errors: list[EntryError] = Field(default_factory=list)

    def get(self, name: str) -> Optional[Curve]:
        return next((c for c in self.curves if c.name == name), None)


def curve_from_entry(entry: CatalogEntry, settings: Optional[RunSettings] = None) -> Curve:
    """Build a curve from one catalog entry.

    When both ``p_coefficients`` and ``point_counts`` are present the
    coefficients win and the counts they imply must match the given ones.

    Raises
    ------
    EntryError
        If the data does not describe a valid curve.
    """
    try:
        if entry.p_coefficients is None:
            return curve_from_point_counts(entry.name, entry.q, entry.g, entry.point_counts, settings)
        c = curve_from_coefficients(entry.name, entry.q, entry.g, entry.p_coefficients, settings)
    except (ZetaError, ValueError, ZeroDivisionError) as e:
        raise EntryError(entry.name, str(e)) from e
    if entry.point_counts is not None:
        implied = point_counts(c, len(entry.point_counts))
        if implied != list(entry.point_counts):
            raise EntryError(
                entry.name,
                f"point_counts {entry.point_counts} disagree with p_coefficients (implied {implied})",
            )
    return c


def parse_catalog(text: str, settings: Optional[RunSettings] = None) -> Catalog:
    """Parse catalog JSON text, collecting one error per bad entry.

    Raises
    ------
    CatalogParseError
        If the text is not JSON or lacks the ``curves`` list.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise CatalogParseError(e.msg, e.lineno, e.colno) from e
    try:
        parsed = CatalogFile.model_validate(raw)
    except ValidationError as e:
        raise CatalogParseError(f"not a catalog: {e.errors()[0]['msg']}") from e

    catalog = Catalog()
    seen: set[str] = set()
    for i, item in enumerate(parsed.curves):
        label = str(item.get("name", f"#{i}"))
        try:
            entry = CatalogEntry.model_validate(item)
        except ValidationError as e:
            catalog.errors.append(EntryError(label, "; ".join(err["msg"] for err in e.errors())))
            continue
        if entry.name in seen:
            catalog.errors.append(EntryError(entry.name, "duplicate curve name"))
            continue
        seen.add(entry.name)
        try:
            catalog.curves.append(curve_from_entry(entry, settings))
        except EntryError as e:
            catalog.errors.append(e)

    for err in catalog.errors:
        logger.error(f"Catalog entry rejected: {err}")
    logger.info(f"Loaded {len(catalog.curves)} curve(s), rejected {len(catalog.errors)}")
    return catalog


def load_catalog(path: Path, settings: Optional[RunSettings] = None) -> Catalog:
    """Read and validate the catalog file at ``path``."""
    return parse_catalog(Path(path).read_text(encoding="utf-8"), settings)

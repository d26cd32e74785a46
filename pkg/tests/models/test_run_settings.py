import pytest
from pydantic import ValidationError

from src.models.catalog import CatalogEntry
from src.models.run_settings import RunSettings


def test_defaults():
    settings = RunSettings()

    assert settings.precision_bits == 128
    assert settings.tolerance == 1e-9
    assert settings.samples == 1000
    assert settings.seed == 0
    assert not settings.reject_non_prime_power


def test_environment_override(monkeypatch):
    monkeypatch.setenv("ZETA_PRECISION_BITS", "256")
    monkeypatch.setenv("ZETA_SEED", "42")

    settings = RunSettings()
    assert settings.precision_bits == 256
    assert settings.seed == 42


def test_overrides_skip_missing_flags():
    settings = RunSettings().with_overrides(precision_bits=64, tolerance=None, seed=None)

    assert settings.precision_bits == 64
    assert settings.tolerance == 1e-9


def test_invalid_settings():
    with pytest.raises(ValidationError):
        RunSettings(tolerance=0)


def test_catalog_entry_needs_data():
    with pytest.raises(ValidationError):
        CatalogEntry(name="E", q=2, g=1)


def test_catalog_entry_field_ranges():
    with pytest.raises(ValidationError):
        CatalogEntry(name="E", q=1, g=1, point_counts=[1])
    with pytest.raises(ValidationError):
        CatalogEntry(name="", q=2, g=1, point_counts=[3])
    entry = CatalogEntry(name="E", q=2, g=1, p_coefficients=["1", "0", "2"])
    assert entry.point_counts is None

import json

import pytest

from src.errors import CatalogParseError
from src.exact.polynomial import Poly
from src.models.project_paths import ProjectPathsSettings
from src.shell.catalog import load_catalog, parse_catalog


def _catalog(*entries) -> str:
    return json.dumps({"curves": list(entries)})


def test_single_entry():
    catalog = parse_catalog(_catalog({"name": "E0", "q": 2, "g": 1, "point_counts": [3]}))
    assert len(catalog.curves) == 1
    assert catalog.errors == []
    assert catalog.get("E0").p == Poly([1, 0, 2])
    assert catalog.get("missing") is None


def test_empty_catalog():
    catalog = parse_catalog(_catalog())
    assert catalog.curves == []
    assert catalog.errors == []


def test_inconsistent_counts_are_rejected():
    entry = {"name": "bad", "q": 2, "g": 1, "point_counts": [4], "p_coefficients": ["1", "0", "2"]}
    catalog = parse_catalog(_catalog(entry))
    assert catalog.curves == []
    assert [e.name for e in catalog.errors] == ["bad"]


def test_errors_are_collected_per_entry():
    catalog = parse_catalog(
        _catalog(
            {"name": "E0", "q": 2, "g": 1, "point_counts": [3]},
            {"name": "E0", "q": 2, "g": 1, "point_counts": [3]},
            {"name": "nodata", "q": 2, "g": 1},
            {"name": "weil", "q": 2, "g": 1, "point_counts": [10]},
            {"name": "C5", "q": 2, "g": 2, "point_counts": [3, 5]},
        )
    )
    assert [c.name for c in catalog.curves] == ["E0", "C5"]
    assert sorted(e.name for e in catalog.errors) == ["E0", "nodata", "weil"]


def test_parse_error_reports_position():
    with pytest.raises(CatalogParseError) as err:
        parse_catalog('{\n  "curves": [\n')
    assert err.value.line == 3
    assert err.value.column == 1


def test_missing_curve_list_is_a_parse_error():
    with pytest.raises(CatalogParseError):
        parse_catalog('{"curves": 3}')


def test_load_from_file(tmp_path):
    path = tmp_path / "catalog.json"
    path.write_text(_catalog({"name": "E0", "q": 2, "g": 1, "p_coefficients": ["1", "0", "2"]}))
    assert load_catalog(path).get("E0").q == 2


def test_bundled_catalog():
    catalog = load_catalog(ProjectPathsSettings().default_catalog)
    assert [c.name for c in catalog.curves] == ["E0", "C5", "S3"]
    assert catalog.errors == []

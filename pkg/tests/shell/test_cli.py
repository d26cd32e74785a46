import argparse
import json

import pandas as pd
import pytest

from main import parse_ranks, run


def test_parse_ranks():
    assert parse_ranks("1..3") == [1, 2, 3]
    assert parse_ranks("2..2") == [2]
    for bad in ("3..1", "0..2", "1-3"):
        with pytest.raises(argparse.ArgumentTypeError):
            parse_ranks(bad)


def test_rh_to_file(tmp_path):
    out = tmp_path / "rh.json"
    assert run(["rh", "--curve", "E0", "--rank", "2", "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["command"] == "rh"
    assert report["results"][0]["holds"] is True
    assert report["metadata"]["precision_bits"] == 128


def test_flags_reach_the_settings(tmp_path):
    out = tmp_path / "rh.json"
    assert run(["rh", "--curve", "C5", "--ranks", "1..2", "--precision", "192", "--tolerance", "1e-12", "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["metadata"]["precision_bits"] == 192
    assert report["metadata"]["tolerance"] == 1e-12
    assert [r["n"] for r in report["results"]] == [1, 2]


def test_csv_emission(tmp_path):
    out = tmp_path / "rh.json"
    assert run(["rh", "--curve", "E0", "--rank", "3", "--emit", "both", "--out", str(out)]) == 0
    df_ = pd.read_csv(out.with_suffix(".csv"))
    assert len(df_) == 2
    assert df_["modulus"].tolist() == pytest.approx([8**0.5] * 2)


def test_csv_emission_also_writes_the_json(tmp_path):
    out = tmp_path / "rh.json"
    assert run(["rh", "--curve", "E0", "--rank", "2", "--emit", "csv", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["results"][0]["n"] == 2
    assert len(pd.read_csv(out.with_suffix(".csv"))) == 2


def test_false_verdict_still_exits_zero(tmp_path):
    out = tmp_path / "rank3.json"
    assert run(["rank3", "--curve", "E0", "--samples", "10", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["results"][0]["third_line"]["holds"] is False


def test_input_errors_exit_one(tmp_path):
    assert run(["rh", "--curve", "nope", "--out", str(tmp_path / "x.json")]) == 1
    assert run(["rh", "--catalog", str(tmp_path / "missing.json")]) == 1
    broken = tmp_path / "broken.json"
    broken.write_text("{")
    assert run(["rh", "--catalog", str(broken)]) == 1


def test_rejected_entry_exits_one(tmp_path):
    catalog = tmp_path / "catalog.json"
    catalog.write_text(json.dumps({"curves": [
        {"name": "E0", "q": 2, "g": 1, "point_counts": [3]},
        {"name": "bad", "q": 2, "g": 1, "point_counts": [10]},
    ]}))
    out = tmp_path / "artin.json"
    assert run(["artin", "--catalog", str(catalog), "--out", str(out)]) == 1
    report = json.loads(out.read_text())
    assert [c["name"] for c in report["results"]] == ["E0"]
    assert len(report["ingestion_errors"]) == 1


def test_check_and_miracle(tmp_path):
    check = tmp_path / "check.json"
    assert run(["check", "--curve", "C5", "--samples", "50", "--out", str(check)]) == 0
    report = json.loads(check.read_text())
    assert sorted({r["n"] for r in report["results"]}) == [1, 2, 3]
    assert report["identity_failures"] == []

    miracle = tmp_path / "miracle.json"
    assert run(["miracle", "--curve", "E0", "--max-rank", "4", "--out", str(miracle)]) == 0
    assert [m["holds"] for m in json.loads(miracle.read_text())["results"]] == [True] * 4

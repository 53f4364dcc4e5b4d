"""Command-line interface: dispatch, validation, report determinism."""

import csv
import json

import pytest

from ohopf.cli import main


def test_verify_algebra_text(tmp_path, capsys):
    out = tmp_path / "report.txt"
    rc = main(
        [
            "verify",
            "--suite",
            "algebra",
            "--dim",
            "4",
            "--backend",
            "exact",
            "--out",
            str(out),
        ]
    )
    assert rc == 0
    text = out.read_text()
    assert "PASS" in text and "checks passed" in text


def test_verify_json_deterministic(tmp_path):
    args = [
        "verify",
        "--suite",
        "leaves",
        "--dim",
        "4",
        "--seed",
        "11",
        "--samples",
        "24",
        "--format",
        "json",
    ]
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    doc = json.loads(a.read_text())
    assert doc["schema_version"] == "1"
    assert doc["passed"] is True
    assert all("law" in c for c in doc["checks"])


def test_invalid_dim_rejected():
    with pytest.raises(SystemExit) as err:
        main(["verify", "--suite", "foliation", "--dim", "16"])
    assert err.value.code == 2


def test_invalid_tol_rejected():
    with pytest.raises(SystemExit) as err:
        main(["verify", "--suite", "groupoid", "--dim", "4", "--tol", "-1"])
    assert err.value.code == 2


def test_export_leaf_csv(tmp_path):
    out = tmp_path / "leaf.csv"
    rc = main(
        ["export-leaf", "--slope", "e1", "--radius", "1.0", "-n", "20", "--seed", "3", "--out", str(out)]
    )
    assert rc == 0
    with open(out) as fh:
        rows = list(csv.reader(fh))
    assert len(rows) == 21
    assert rows[0][:2] == ["x0", "x1"]
    values = [float(v) for v in rows[1]]
    assert abs(sum(v * v for v in values) - 1.0) < 1e-12


def test_export_leaf_infinity_single_point(tmp_path):
    out = tmp_path / "inf.csv"
    rc = main(["export-leaf", "--slope", "inf", "--radius", "1.0", "-n", "1", "--out", str(out)])
    assert rc == 0
    with open(out) as fh:
        rows = list(csv.reader(fh))
    assert len(rows) == 2
    assert all(float(v) == 0.0 for v in rows[1][:8])


def test_export_leaf_origin(tmp_path):
    out = tmp_path / "origin.csv"
    rc = main(["export-leaf", "--slope", "origin", "-n", "3", "--out", str(out)])
    assert rc == 0
    with open(out) as fh:
        rows = list(csv.reader(fh))
    assert len(rows) == 4
    assert all(float(v) == 0.0 for row in rows[1:] for v in row)


def test_export_leaf_bad_slope():
    with pytest.raises(SystemExit) as err:
        main(["export-leaf", "--slope", "sideways", "--out", "/tmp/x.csv"])
    assert err.value.code == 2


def test_env_override(monkeypatch):
    # defaults are read from the environment each time the parser is built
    monkeypatch.setenv("OHOPF_SEED", "99")
    from ohopf.cli import build_parser

    args = build_parser().parse_args(["verify", "--suite", "algebra"])
    assert args.seed == 99

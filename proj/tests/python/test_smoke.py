import json
import os
import subprocess
from pathlib import Path

import pytest

import veritab

ROOT = Path(os.environ["VERITAB_SOURCE_DIR"])


def golden_records():
    with open(ROOT / "data" / "golden_traces.jsonl") as f:
        return [json.loads(line) for line in f if line.strip()]


def test_execute_proof():
    verdict, trace = veritab.execute_proof(["EQ", "EQ", "ALT"])
    assert verdict == "Refuted"
    assert trace == ["S", "S", "R"]
    assert veritab.execute_proof(["EQ", "EQ", "ALT", "FE"])[0] == "NEI"
    assert veritab.execute_proof([]) == ("Supported", [])
    with pytest.raises(ValueError):
        veritab.execute_proof(["XX"])


def test_arithmetic_answers():
    assert veritab.arith_answer("SUM", ["3945", "1126", "1363", "5804"]) == "SUM 12,238"
    assert veritab.arith_answer("COMP", ["8", "16"]) == "COMP -8"
    with pytest.raises(ValueError):
        veritab.arith_answer("GUESS", ["1"])


def test_quantity_comparison():
    assert veritab.compare_quantities("4", "three municipalities") == "ALT"
    assert veritab.compare_quantities("99", "about 100 residents") == "FE"
    assert veritab.compare_quantities("101", "100 residents") == "ALT"
    assert veritab.compare_quantities("4", "no numbers here") is None


def test_metrics_and_labels():
    assert veritab.canonical_label("SUPPORTS") == "Supported"
    assert veritab.canonical_label("NOT ENOUGH INFO") == "NEI"
    metrics = veritab.compute_metrics(
        ["Supported", "Refuted", "Refuted", "Refuted"],
        ["SUPPORTS", "SUPPORTS", "REFUTES", "REFUTES"],
    )
    assert metrics["accuracy"] == pytest.approx(0.75)
    assert metrics["macro_f1"] == pytest.approx(11.0 / 15.0)
    folded = veritab.compute_metrics(["NEI"], ["REFUTES"], two_way=True)
    assert folded["accuracy"] == 1.0


def test_verify_claim_replays_recorded_traces():
    fixtures = str(ROOT / "data" / "golden_fixtures")
    records = golden_records()
    assert len(records) == 2
    for record in records:
        report = json.loads(
            veritab.verify_claim(json.dumps(record["tables"]), record["claim"], fixtures)
        )
        assert report["verdict"] == "Supported"
        assert report["execution_found"] is True
        assert len(report["proofs"]) == len(report["subclaims"])


def test_cli_verifies_recorded_traces(tmp_path):
    cli = os.environ["VERITAB_CLI"]
    fixtures = str(ROOT / "data" / "golden_fixtures")
    for i, record in enumerate(golden_records()):
        evidence = tmp_path / f"evidence_{i}.json"
        evidence.write_text(json.dumps({"tables": record["tables"]}))
        result = subprocess.run(
            [
                cli,
                "--backend",
                f"mock:{fixtures}",
                "verify",
                "--claim",
                record["claim"],
                "--evidence",
                str(evidence),
            ],
            check=True,
            capture_output=True,
            text=True,
        )
        report = json.loads(result.stdout)
        assert report["verdict"] == "Supported"
        assert report["execution_found"] is True

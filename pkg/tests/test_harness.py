import json

import pytest

from circuitwalks import (
    CASES,
    ResultCache,
    claims_for,
    claims_manifest,
    verify_case,
)
from circuitwalks import harness


def test_manifest_well_formed():
    manifest = claims_manifest()
    claims = manifest["claims"]
    ids = [c["id"] for c in claims]
    assert len(ids) == len(set(ids))
    for c in claims:
        case, suffix = c["id"].split(".", 1)
        assert case == c["case"]
        assert c["case"] in CASES
        assert c["provenance"] in {"published", "derived"}
        assert c["statement"]
        assert "expected" in c
        # every claim must have a registered evaluator, or verify_case
        # would crash mid-run instead of reporting a failure
        assert suffix in harness._EVALUATORS, c["id"]
    assert sum(len(claims_for(case)) for case in CASES) == len(claims)


def test_verify_case_rejects_unknown_case():
    with pytest.raises(ValueError):
        verify_case("nonesuch")


def test_verify_todd(tmp_path):
    report = verify_case("todd", cache=ResultCache(tmp_path))
    assert report.ok
    assert report.failed_ids() == []
    assert len(report.results) == len(claims_for("todd"))
    lines = report.summary_lines()
    assert len(lines) == len(report.results) + 1
    assert all(line.startswith("PASS ") for line in lines[:-1])
    assert "all claims pass" in lines[-1]
    obj = json.loads(report.to_json())
    assert obj["case"] == "todd"
    assert obj["passed"] is True
    assert obj["failed_claims"] == []
    assert {r["claim_id"] for r in obj["results"]} == {c["id"] for c in claims_for("todd")}
    assert obj["certificates"]

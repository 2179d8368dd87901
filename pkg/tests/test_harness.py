import csv
import io
import json

import pytest

from atnlab import (SUITE_IDS, Budget, OracleMismatchError, claimed_value,
                    complete, compute_at, format_report, run_suite,
                    total_graph)

ROW_KEYS = {"params", "claimed", "claimed_alt", "computed", "match",
            "match_alt", "lower_bound_ok", "method", "elapsed_ms", "work"}


def test_claimed_values():
    assert claimed_value("thm1", {"n": 4}) == (3, None)
    assert claimed_value("cor2", {"n": 3}) == (3, None)
    assert claimed_value("thm2", {"m": 3, "n": 6}) == (3, None)
    assert claimed_value("thm3", {"kind": "circulant", "side": 4, "degree": 2}) == (1, 2)
    assert claimed_value("thm4", {"k": 3, "n": 2}) == (2, 3)
    assert claimed_value("thm5", {"order": 4}) == (3, None)
    assert claimed_value("thm6", {"base_family": "complete", "base_params": [4]}) == (3, 3)
    assert claimed_value("cor_total", {"base_family": "complete",
                                       "base_params": [4],
                                       "hypothesis_met": True}) == (5, None)
    assert claimed_value("lemma1", {"family": "complete", "params": [5]}) == (2, None)


def test_claimed_value_enforces_hypotheses():
    with pytest.raises(ValueError):
        claimed_value("thm1", {"n": 3})  # odd side
    with pytest.raises(ValueError):
        claimed_value("thm2", {"m": 2, "n": 3})  # 5 does not divide 6
    with pytest.raises(ValueError):
        claimed_value("thm2", {"m": 6, "n": 3})  # m must be the smaller side
    with pytest.raises(ValueError):
        claimed_value("thm2", {"m": 3, "n": 5})  # n must be even
    with pytest.raises(ValueError):
        claimed_value("thm3", {"kind": "circulant", "side": 4, "degree": 3})
    with pytest.raises(ValueError):
        claimed_value("thm4", {"k": 2, "n": 3})  # odd part size
    with pytest.raises(ValueError):
        claimed_value("thm5", {"order": 6})  # needs a multiple of 4
    with pytest.raises(ValueError):
        claimed_value("thm6", {"base_family": "cycle", "base_params": [6]})
    with pytest.raises(ValueError):
        claimed_value("nope", {})


def test_compute_at_agreement_and_fallback():
    g = complete(3)
    value, used = compute_at(g, "both", Budget(max_ms=None))
    assert (value, used) == (3, "both")
    # past the direct parity cap only the expansion route can answer
    t = total_graph(complete(4))
    value, used = compute_at(t, "both", Budget(max_ms=None))
    assert (value, used) == (5, "poly")
    value, used = compute_at(g, "orient", Budget(max_ms=None))
    assert (value, used) == (3, "orient")
    with pytest.raises(ValueError):
        compute_at(g, "fastest", Budget(max_ms=None))


def test_compute_at_reports_full_budget_exhaustion():
    t = total_graph(complete(4))
    # 30 edges kills the parity route; a tiny term cap kills the expansion
    value, used = compute_at(t, "both", Budget(max_ms=None, max_term_ops=10))
    assert value == "budget-exceeded"
    assert used == "both"


def test_run_suite_rows_have_the_full_schema():
    for suite in SUITE_IDS:
        report = run_suite(suite)
        assert report["suite"] == suite
        assert report["instances"], suite
        for row in report["instances"]:
            assert set(row) == ROW_KEYS, suite
            assert row["lower_bound_ok"] is True
            assert row["elapsed_ms"] == 0


def test_run_suite_match_semantics():
    # lemma1 scores computed >= claimed, so larger values still match
    rep = run_suite("lemma1")
    for row in rep["instances"]:
        assert row["match"] == (row["computed"] >= row["claimed"])
        assert row["match_alt"] is None
    # cor_total scores computed <= claimed
    rep = run_suite("cor_total")
    for row in rep["instances"]:
        if row["computed"] != "budget-exceeded":
            assert row["match"] == (row["computed"] <= row["claimed"])
    # equality suites fill match_alt when a second reading exists
    rep = run_suite("thm3")
    for row in rep["instances"]:
        assert row["match"] is False and row["match_alt"] is True


def test_run_suite_max_size_filters():
    rep = run_suite("cor2", max_size=4)
    assert [row["params"]["n"] for row in rep["instances"]] == [1, 2]
    rep_all = run_suite("cor2")
    assert len(rep_all["instances"]) == 4


def test_run_suite_method_restriction():
    rep = run_suite("thm1", method="poly")
    assert all(row["method"] == "poly" for row in rep["instances"])
    rep = run_suite("thm1", method="orient")
    assert all(row["method"] == "orient" for row in rep["instances"])


def test_reports_are_deterministic():
    a = format_report(run_suite("thm1"), "json")
    b = format_report(run_suite("thm1"), "json")
    assert a == b
    assert a.endswith("\n")


def test_format_report_json_csv_table():
    rep = run_suite("thm1")
    parsed = json.loads(format_report(rep, "json"))
    assert parsed == rep

    rows = list(csv.DictReader(io.StringIO(format_report(rep, "csv"))))
    assert len(rows) == len(rep["instances"])
    assert rows[0]["suite"] == "thm1"
    assert rows[0]["computed"] == "2"
    assert rows[0]["match"] == "true"
    assert json.loads(rows[0]["params"]) == {"n": 2}

    table = format_report(rep, "table")
    lines = table.strip().splitlines()
    assert lines[0] == "suite: thm1"
    assert "claimed" in lines[1] and "computed" in lines[1]
    assert len(lines) == 2 + len(rep["instances"])
    with pytest.raises(ValueError):
        format_report(rep, "yaml")


def test_oracle_mismatch_error_payload():
    err = OracleMismatchError({"n": 3}, 3, 4)
    assert "3" in str(err) and "4" in str(err)
    assert err.poly_value == 3 and err.orient_value == 4

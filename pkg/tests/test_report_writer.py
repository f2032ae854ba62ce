"""
Report rendering, loading and diffing
"""

import json

import pytest

from src.frt_lab.core.errors import BadEntry, SchemaMismatch
from src.frt_lab.models.report_models import CheckRecord, Report, Verdict
from src.frt_lab.tools.reports import diff_reports, emit_report, load_report, render_json, render_markdown

pytestmark = pytest.mark.unit


def make_report(suite="ybe", verdicts=None):
    verdicts = verdicts or {"ybe.b": Verdict.PASS, "ybe.a": Verdict.INFO}
    records = [
        CheckRecord(id=k, anchor="solution to the parametrized YBE", verdict=v, inputs={"x": "2"},
                    witness={"residual": [[1]]} if v is Verdict.FAIL else None)
        for k, v in verdicts.items()
    ]
    return Report(suite=suite, records=records, config={"seed": 7, "q": "3"})


def test_json_is_sorted_and_stable():
    first = render_json(make_report())
    second = render_json(make_report())
    assert first == second
    assert first.endswith("\n")
    data = json.loads(first)
    assert [r["id"] for r in data["records"]] == ["ybe.a", "ybe.b"]
    assert data["summary"] == {"PASS": 1, "FAIL": 0, "INFO": 1, "total": 2}


def test_fail_without_witness_rejected():
    with pytest.raises(BadEntry):
        CheckRecord(id="x", anchor="", verdict=Verdict.FAIL)


def test_markdown_has_tables_and_failures():
    text = render_markdown(make_report(verdicts={"ybe.r": Verdict.FAIL, "ybe.s": Verdict.PASS}))
    assert text.startswith("# frtlab report: ybe")
    assert "| verdict" in text
    assert "## Failures" in text
    assert "### ybe.r" in text


def test_emit_and_load_round_trip(tmp_path):
    path = tmp_path / "out" / "report.json"
    text = emit_report(make_report(), "json", str(path))
    assert path.read_text(encoding="utf-8") == text
    loaded = load_report(str(path))
    assert render_json(loaded) == text


def test_emit_to_stdout(capsys):
    emit_report(make_report(), "markdown")
    assert "## Records" in capsys.readouterr().out


def test_load_rejects_garbage(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("not json", encoding="utf-8")
    with pytest.raises(SchemaMismatch):
        load_report(str(path))
    path.write_text(json.dumps({"suite": "ybe", "records": [], "schema_version": 999}), encoding="utf-8")
    with pytest.raises(SchemaMismatch):
        load_report(str(path))


def test_diff():
    before = make_report(verdicts={"ybe.a": Verdict.PASS, "ybe.b": Verdict.PASS, "ybe.c": Verdict.INFO})
    after = make_report(verdicts={"ybe.a": Verdict.PASS, "ybe.b": Verdict.FAIL, "ybe.d": Verdict.PASS})
    result = diff_reports(before, after)
    assert result["changed"] == [{"id": "ybe.b", "before": "PASS", "after": "FAIL"}]
    assert result["added"] == [{"id": "ybe.d", "verdict": "PASS"}]
    assert result["removed"] == [{"id": "ybe.c", "verdict": "INFO"}]


def test_diff_across_suites_rejected():
    with pytest.raises(SchemaMismatch):
        diff_reports(make_report("ybe"), make_report("aff"))


def test_unknown_format_rejected():
    with pytest.raises(BadEntry):
        emit_report(make_report(), "yaml")

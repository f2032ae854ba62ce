"""
Command line: verbs, exit codes and report output
"""

import json

import pytest

from src.frt_lab.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, build_parser, run
from src.frt_lab.models.report_models import CheckRecord, Report, Verdict
from src.frt_lab.tools.reports import emit_report

FF_POINTS = '[[1,1,2,1,1,3], {"a1":2,"a2":1,"b1":1,"b2":1,"c1":1,"c2":3}]'


@pytest.fixture(autouse=True)
def quiet_logs(tmp_path, monkeypatch):
    monkeypatch.setenv("FRTLAB_LOG_DIR", str(tmp_path / "logs"))
    monkeypatch.setenv("FRTLAB_LOG_CONSOLE", "false")


def write_report(path, verdict):
    witness = {"residual": 1} if verdict is Verdict.FAIL else None
    report = Report(suite="ybe", records=[CheckRecord(id="ybe.x", anchor="", verdict=verdict, witness=witness)])
    emit_report(report, "json", str(path))
    return str(path)


@pytest.mark.unit
def test_parser_knows_every_verb():
    parser = build_parser()
    args = parser.parse_args(["--seed", "5", "slqhat", "reduce-scan", "--m", "1", "--n", "2"])
    assert (args.verb, args.action, args.seed, args.m, args.n) == ("slqhat", "reduce-scan", 5, 1, 2)
    args = parser.parse_args(["aff", "--seed", "9"])
    assert args.action is None and args.seed == 9


@pytest.mark.unit
def test_usage_error_exits_with_two():
    with pytest.raises(SystemExit) as info:
        run(["ybe", "no-such-action"])
    assert info.value.code == EXIT_USAGE


@pytest.mark.unit
def test_explicit_points_to_file(tmp_path):
    out = tmp_path / "ybe.json"
    code = run(["ybe", "check", "--family", "free_fermion", "--points", FF_POINTS, "--out", str(out)])
    assert code == EXIT_OK
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["suite"] == "ybe"
    assert data["summary"]["FAIL"] == 0
    assert data["config"]["family"] == "free_fermion"


@pytest.mark.unit
def test_markdown_to_stdout(capsys):
    code = run(["--format", "markdown", "frt", "component", "--points", '["2","5"]', "--degree", "2"])
    assert code == EXIT_OK
    assert "# frtlab report: frt" in capsys.readouterr().out


@pytest.mark.unit
@pytest.mark.parametrize("argv", [
    ["frt", "--q", "4/6"],
    ["frt", "--q", "i"],
    ["ybe", "--family", "six_vertex"],
    ["duality", "--field", "gaussian"],
])
def test_configuration_errors_exit_with_two(argv):
    assert run(argv) == EXIT_USAGE


@pytest.mark.unit
def test_bad_config_file(tmp_path):
    path = tmp_path / "run.json"
    path.write_text('{"seed": "many"}', encoding="utf-8")
    assert run(["--config", str(path), "ybe"]) == EXIT_USAGE


@pytest.mark.unit
def test_diff_exit_codes(tmp_path):
    good = write_report(tmp_path / "a.json", Verdict.PASS)
    bad = write_report(tmp_path / "b.json", Verdict.FAIL)
    assert run(["diff", good, good]) == EXIT_OK
    assert run(["diff", good, bad]) == EXIT_FAIL


@pytest.mark.slow
@pytest.mark.integration
def test_ybe_suite_with_small_samples(tmp_path):
    out = tmp_path / "ybe.json"
    assert run(["ybe", "--samples", "3", "--seed", "11", "--out", str(out)]) == EXIT_OK
    first = out.read_bytes()
    assert run(["ybe", "--samples", "3", "--seed", "11", "--out", str(out)]) == EXIT_OK
    assert out.read_bytes() == first

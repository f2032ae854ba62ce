"""
Run configuration loading, validation and override merging
"""

import json

import pytest

from src.frt_lab.core.config import DEFAULT_SAMPLES, SUITE_NAMES
from src.frt_lab.core.config.run_config import RunConfig, load_run_config
from src.frt_lab.core.errors import ConfigError

pytestmark = pytest.mark.unit


def write_config(tmp_path, payload):
    path = tmp_path / "run.json"
    path.write_text(payload if isinstance(payload, str) else json.dumps(payload, indent=2), encoding="utf-8")
    return str(path)


def test_defaults():
    config = load_run_config()
    assert config.field == "rational"
    assert config.q_text == "3"
    assert config.samples == DEFAULT_SAMPLES
    assert config.suites == list(SUITE_NAMES)
    assert config.q_spec().generic


def test_gaussian_default_q():
    config = RunConfig(field="gaussian")
    assert config.q_text == "i"
    assert not config.q_spec().generic


def test_file_and_overrides(tmp_path):
    path = write_config(tmp_path, {"seed": 11, "samples": {"ybe": 5}, "suites": ["aff", "ybe"]})
    config = load_run_config(path, {"seed": 99, "samples": {"frt": 2}, "q": None})
    assert config.seed == 99
    assert config.samples["ybe"] == 5 and config.samples["frt"] == 2
    assert config.samples["gamma"] == DEFAULT_SAMPLES["gamma"]
    assert config.suites == ["ybe", "aff"]


def test_unknown_key_reports_key_and_line(tmp_path):
    path = write_config(tmp_path, '{\n  "seed": 1,\n  "colour": "blue"\n}\n')
    with pytest.raises(ConfigError) as info:
        load_run_config(path)
    assert info.value.key == "colour"
    assert info.value.line == 3


def test_json_syntax_error_has_a_line(tmp_path):
    path = write_config(tmp_path, '{\n  "seed": 1,\n}\n')
    with pytest.raises(ConfigError) as info:
        load_run_config(path)
    assert info.value.line is not None
    assert info.value.key is None


def test_missing_file():
    with pytest.raises(ConfigError):
        load_run_config("/nonexistent/run.json")


@pytest.mark.parametrize("q", ["4/6", "1", "-1", "abc", "i"])
def test_bad_q_rejected(q):
    with pytest.raises(ConfigError) as info:
        load_run_config(None, {"q": q})
    assert info.value.key == "q"


@pytest.mark.parametrize("payload", [
    {"samples": {"nonsense": 3}},
    {"samples": {"ybe": 0}},
    {"suites": ["ybe", "sixth"]},
    {"suites": []},
    {"field": "real"},
    {"format": "yaml"},
    {"degree_cap": 9},
])
def test_invalid_values(payload):
    with pytest.raises(ConfigError):
        load_run_config(None, payload)


def test_family_names_are_normalized():
    assert load_run_config(None, {"family": "Free-Fermion"}).family == "free_fermion"
    with pytest.raises(ConfigError) as info:
        load_run_config(None, {"family": "six_vertex"})
    assert info.value.key == "family"


def test_echo_omits_output():
    config = RunConfig(output="reports/x.json")
    echoed = config.echo()
    assert "output" not in echoed
    assert echoed["q"] == "3"

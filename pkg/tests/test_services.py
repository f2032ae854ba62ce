"""
Suite dispatch, point parsing and report assembly
"""

import pytest

from src.frt_lab.algebra.scalar_field import RATIONAL
from src.frt_lab.core.config.run_config import RunConfig
from src.frt_lab.core.errors import ConfigError, FrtLabError
from src.frt_lab.models.report_models import CheckRecord, Verdict
from src.frt_lab.services import SUITES, SuiteRunner
from src.frt_lab.services.points import load_json_list, parse_gamma_points, parse_scalar_points
from src.frt_lab.services.suite_runner import assemble

FF_POINTS = '[[1,1,2,1,1,3], {"a1":2,"a2":1,"b1":1,"b2":1,"c1":1,"c2":3}, [3,1,1,1,2,2]]'


def record(check_id, verdict=Verdict.PASS):
    return CheckRecord(id=check_id, anchor="", verdict=verdict)


@pytest.mark.unit
class TestPoints:
    def test_scalar_points(self):
        assert parse_scalar_points(["2", "1/3", 5], RATIONAL) == [
            RATIONAL.from_ints(2), RATIONAL.from_ints(1, 3), RATIONAL.from_ints(5)]
        with pytest.raises(ConfigError):
            parse_scalar_points(["2/4"], RATIONAL)

    def test_gamma_points(self):
        points = parse_gamma_points(load_json_list(FF_POINTS), RATIONAL)
        assert len(points) == 3
        assert points[1].a1 == RATIONAL.from_ints(2)

    @pytest.mark.parametrize("text", ["[", "[]", '{"a": 1}'])
    def test_bad_lists(self, text):
        with pytest.raises(ConfigError):
            load_json_list(text)

    def test_weights_must_be_free_fermionic(self):
        with pytest.raises(ConfigError) as info:
            parse_gamma_points([[1, 1, 1, 1, 1, 1]], RATIONAL)
        assert info.value.key == "points"


@pytest.mark.unit
class TestAssembly:
    def test_records_sorted_by_id(self, small_config):
        report = assemble("ybe", [record("ybe.b"), record("ybe.a")], small_config)
        assert [r.id for r in report.records] == ["ybe.a", "ybe.b"]
        assert report.config["seed"] == 7

    def test_duplicate_ids_rejected(self, small_config):
        with pytest.raises(FrtLabError):
            assemble("ybe", [record("ybe.a"), record("ybe.a")], small_config)


@pytest.mark.unit
class TestDispatch:
    def test_every_suite_registered(self):
        assert set(SUITES) == {"ybe", "frt", "duality", "slqhat", "aff"}

    def test_unknown_action(self, small_config):
        with pytest.raises(ConfigError) as info:
            SUITES["ybe"](small_config).run("explode")
        assert info.value.key == "action"

    def test_ybe_check_at_explicit_points(self, small_config):
        report = SuiteRunner(small_config).run("ybe", "check", {"points": FF_POINTS})
        assert report.summary["total"] == 2
        assert report.passed

    def test_ybe_check_needs_two_points(self, small_config):
        with pytest.raises(ConfigError):
            SuiteRunner(small_config).run("ybe", "check", {"points": "[[1,1,2,1,1,3]]"})

    def test_generic_q_required(self):
        config = RunConfig(field="gaussian")
        for name in ("frt", "duality", "slqhat"):
            with pytest.raises(ConfigError) as info:
                SUITES[name](config).run()
            assert info.value.key == "q"

    def test_frt_component_action(self, small_config):
        report = SuiteRunner(small_config).run("frt", "component", {"points": '["2", "5"]', "degree": 2})
        (only,) = report.records
        assert only.id == "frt.affine_sl2.component.n2"
        assert only.details["dim"] == 16

    def test_aff_classify_rejects_three_points(self, small_config):
        with pytest.raises(ConfigError):
            SuiteRunner(small_config).run("aff", "classify", {"points": FF_POINTS})


@pytest.mark.slow
@pytest.mark.integration
def test_ybe_suite_passes(small_config):
    report = SuiteRunner(small_config).run("ybe")
    assert report.passed
    assert report.summary["total"] > 0
    assert any(r.id == "ybe.free_fermion.perturbed_control" for r in report.records)

"""
Suite runner
Builds one Report per verb and the combined report of the `all` verb
"""

from typing import Any, Dict, List, Optional, Type

from src.frt_lab.core.config.run_config import RunConfig
from src.frt_lab.core.errors import FrtLabError
from src.frt_lab.core.logging import logger
from src.frt_lab.models.report_models import CheckRecord, Report
from src.frt_lab.services.aff_suite import AffSuite
from src.frt_lab.services.base_suite import Suite
from src.frt_lab.services.duality_suite import DualitySuite
from src.frt_lab.services.frt_suite import FrtSuite
from src.frt_lab.services.slqhat_suite import SlqhatSuite
from src.frt_lab.services.ybe_suite import YbeSuite

SUITES: Dict[str, Type[Suite]] = {
    "ybe": YbeSuite,
    "frt": FrtSuite,
    "duality": DualitySuite,
    "slqhat": SlqhatSuite,
    "aff": AffSuite,
}


def assemble(suite: str, records: List[CheckRecord], config: RunConfig) -> Report:
    """Ordered reduction keyed by check id; duplicate ids are a programming error"""
    seen = set()
    for record in records:
        if record.id in seen:
            raise FrtLabError(f"duplicate check id {record.id}")
        seen.add(record.id)
    report = Report(suite=suite, config=config.echo())
    report.extend(sorted(records, key=lambda r: r.id))
    return report


class SuiteRunner:
    """Runs suites in the fixed order ybe, frt, duality, slqhat, aff"""

    def __init__(self, config: RunConfig):
        self.config = config

    def run(self, suite: str, action: Optional[str] = None,
            params: Optional[Dict[str, Any]] = None) -> Report:
        try:
            logger.info(f"suite {suite}: start (seed={self.config.seed}, q={self.config.q_text})")
            records = SUITES[suite](self.config).run(action, params)
            report = assemble(suite, records, self.config)
            summary = report.summary
            logger.info(f"suite {suite}: {summary['PASS']} pass, {summary['FAIL']} fail, "
                        f"{summary['INFO']} info of {summary['total']}")
            return report
        except FrtLabError as e:
            logger.error(f"suite {suite} aborted: {e}")
            raise

    def run_all(self) -> Report:
        records: List[CheckRecord] = []
        for suite in self.config.suites:
            records += self.run(suite).records
        report = assemble("all", records, self.config)
        logger.info(f"all suites: {report.summary}")
        return report

"""
ŜL_q(2) suite
Evaluation comodules W_a(r), the dual action, antipode and det_q, reducibility of W(m)⊗W(n), dual comodules
"""

from typing import Any, Dict, List, Optional

from src.frt_lab.algebra.scalar_field import parse_scalar
from src.frt_lab.algebra.slqhat import (
    antipode_check,
    build_W,
    detq_grouplike_check,
    dual_action_check,
    dual_comodule_check,
    reducibility_scan,
    w_closure_check,
)
from src.frt_lab.services.base_suite import Suite
from src.frt_lab.services.points import load_json_list, parse_scalar_points
from src.frt_lab.core.errors import ConfigError, FrtLabError
from src.frt_lab.core.logging import logger
from src.frt_lab.models.report_models import CheckRecord

W_DEGREES = (1, 2, 3)
REDUCE_PAIRS = ((1, 1), (1, 2), (2, 2))
DUAL_DEGREES = (1, 2)


class SlqhatSuite(Suite):
    name = "slqhat"
    actions = {
        "build-w": "build_w",
        "dual-action": "dual_action",
        "antipode": "antipode",
        "detq": "detq",
        "reduce-scan": "reduce_scan",
        "dual-comodule": "dual_comodule",
    }

    def __init__(self, config):
        super().__init__(config)
        self.require_generic_q()

    def _a(self, params: Dict[str, Any], offset: int = 80) -> Any:
        text = params.get("a")
        if text is None:
            return self.sampler(offset).generic()
        try:
            a = parse_scalar(str(text), self.field, require_lowest_terms=True)
        except FrtLabError as e:
            raise ConfigError(str(e), key="a") from e
        if not a:
            raise ConfigError("a must be nonzero", key="a")
        return a

    def _int(self, params: Dict[str, Any], key: str, default: int, low: int = 0) -> int:
        value = params.get(key)
        if value is None:
            return default
        value = int(value)
        if value < low:
            raise ConfigError(f"{key} must be at least {low}", key=key)
        return value

    def _r(self, params: Dict[str, Any], default: int = 1, low: int = 0) -> int:
        r = self._int(params, "r", default, low)
        if r > self.degree_cap:
            raise ConfigError(f"r = {r} exceeds degree_cap = {self.degree_cap}", key="r")
        return r

    def _indexed(self, records: List[CheckRecord], k: int) -> List[CheckRecord]:
        for record in records:
            record.id = f"{record.id}[{k:02d}]"
        return records

    def evaluation_records(self, a, r: int) -> List[CheckRecord]:
        """W_a(r) is closed and its dual action is the evaluation module up to rescaling"""
        W = build_W(a, r, self.q, self.degree_cap)
        return w_closure_check(W, self.degree_cap) + dual_action_check(W)

    def run_all(self) -> List[CheckRecord]:
        records: List[CheckRecord] = []
        a = self.sampler(80).generic()
        for r in W_DEGREES:
            if r <= self.degree_cap:
                records += self.evaluation_records(a, r)
        sampler = self.sampler(81)
        for k in range(self.samples()):
            x = sampler.generic()
            records += self._indexed(antipode_check(x, self.q, degree_cap=self.degree_cap), k)
            records += self._indexed(detq_grouplike_check(x, self.q), k)
        for k, (m, n) in enumerate(REDUCE_PAIRS):
            records += reducibility_scan(m, n, None, self.q,
                                         controls=self.samples("reduce_controls"),
                                         seed=self.config.seed + 90 + k)
        for r in DUAL_DEGREES:
            records += dual_comodule_check(a, r, self.q, self.degree_cap)
        logger.info(f"slqhat suite: {len(records)} records")
        return records

    def build_w(self, params: Dict[str, Any]) -> List[CheckRecord]:
        W = build_W(self._a(params), self._r(params), self.q, self.degree_cap)
        return w_closure_check(W, self.degree_cap)

    def dual_action(self, params: Dict[str, Any]) -> List[CheckRecord]:
        return self.evaluation_records(self._a(params), self._r(params))

    def antipode(self, params: Dict[str, Any]) -> List[CheckRecord]:
        probe = self._int(params, "max_degree", 3, low=1)
        return antipode_check(self._a(params), self.q, probe_degree=probe, degree_cap=self.degree_cap)

    def detq(self, params: Dict[str, Any]) -> List[CheckRecord]:
        max_len = self._int(params, "max_degree", 2, low=1)
        return detq_grouplike_check(self._a(params), self.q, max_len=max_len)

    def reduce_scan(self, params: Dict[str, Any]) -> List[CheckRecord]:
        """Explicit --points are ratios y/x; otherwise predicted ratios plus random controls"""
        m = self._int(params, "m", 1, low=1)
        n = self._int(params, "n", 1, low=1)
        ratios: Optional[List[Any]] = None
        if params.get("points") is not None:
            ratios = parse_scalar_points(load_json_list(params["points"]), self.field)
            if any(not r for r in ratios):
                raise ConfigError("ratios must be nonzero", key="points")
        return reducibility_scan(m, n, ratios, self.q, controls=self.samples("reduce_controls"),
                                 seed=self.config.seed + 90)

    def dual_comodule(self, params: Dict[str, Any]) -> List[CheckRecord]:
        return dual_comodule_check(self._a(params), self._r(params, low=1), self.q, self.degree_cap)

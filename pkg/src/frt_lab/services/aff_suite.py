"""
A_ff suite
Classification of V_x⊗V_y, the comodules U_{x,y} and W_{x,y}, braiding and tensor irreducibility
"""

from typing import Any, Dict, List, Sequence

from src.frt_lab.algebra.aff_lab import (
    INDEPENDENCE_MAX,
    braiding_check,
    classify_check,
    det_tau_check,
    engineered_pair,
    linear_independence_probe,
    power_of_two_probe,
    quotient_dimensions,
    tensor_irreducibility,
    uxy_check,
    wxy_check,
)
from src.frt_lab.algebra.rmatrix_zoo import sample_gamma
from src.frt_lab.services.base_suite import Suite
from src.frt_lab.services.points import load_json_list, parse_gamma_points
from src.frt_lab.core.errors import ConfigError, DimensionMismatch, WrongCase
from src.frt_lab.core.logging import logger
from src.frt_lab.models.aff_models import CaseLabel
from src.frt_lab.models.report_models import CheckRecord, Verdict
from src.frt_lab.models.rmatrix_models import GammaElement


class AffSuite(Suite):
    name = "aff"
    actions = {
        "classify": "classify",
        "braiding": "braiding",
        "tensor-irr": "tensor_irr",
        "probe-pow2": "probe_pow2",
    }

    def _points(self, params: Dict[str, Any], minimum: int = 1) -> List[GammaElement]:
        points = parse_gamma_points(load_json_list(params["points"]), self.field)
        if len(points) < minimum:
            raise ConfigError(f"at least {minimum} points are required", key="points")
        return points

    def _generic_points(self, count: int, offset: int) -> List[GammaElement]:
        sampler = self.sampler(offset, with_q=False)
        points: List[GammaElement] = []
        while len(points) < count:
            g = sample_gamma(sampler)
            if g not in points:
                points.append(g)
        return points

    def _degenerate_points(self, count: int, case: CaseLabel, offset: int) -> List[GammaElement]:
        """Two points whose ratio lies in the given case, padded with generic ones"""
        sampler = self.sampler(offset, with_q=False)
        points = list(engineered_pair(sampler, case))
        while len(points) < count:
            points.append(sample_gamma(sampler))
        return points

    def classification_records(self, count: int) -> List[CheckRecord]:
        records = []
        for c, case in enumerate(CaseLabel):
            sampler = self.sampler(100 + c, with_q=False)
            for k in range(count):
                x, y = engineered_pair(sampler, case)
                records += classify_check(x, y, k, self.degree_cap)
        return records

    def both_zero_records(self, count: int) -> List[CheckRecord]:
        """U_{x,y}, W_{x,y} and the braiding at pairs with a1(z) = a2(z) = 0"""
        sampler = self.sampler(110, with_q=False)
        records = []
        for k in range(count):
            x, y = engineered_pair(sampler, CaseLabel.BOTH_ZERO)
            w = sample_gamma(sampler)
            records += uxy_check(x, y, k, self.degree_cap)
            records += wxy_check(x, y, k, self.degree_cap)
            records += braiding_check(x, y, w, k, self.degree_cap)
        return records

    def irreducibility_records(self) -> List[CheckRecord]:
        slates: List[Sequence[GammaElement]] = [
            self._generic_points(2, 120),
            self._degenerate_points(2, CaseLabel.BOTH_ZERO, 121),
            self._degenerate_points(2, CaseLabel.A1_ZERO, 122),
            self._generic_points(3, 123),
            self._degenerate_points(3, CaseLabel.A2_ZERO, 124),
            self._generic_points(5, 125),
        ]
        records = []
        for k, points in enumerate(slates):
            records += tensor_irreducibility(points, k, self.degree_cap)
        for k, points in enumerate(slates[:5]):
            if len(points) <= INDEPENDENCE_MAX:
                records += linear_independence_probe(points, False, k, self.degree_cap)
                records += linear_independence_probe(points, True, k, self.degree_cap)
        return records

    def dimension_record(self) -> CheckRecord:
        points = self._generic_points(2, 130)
        dims = {f"n{n}": quotient_dimensions(points, n, self.degree_cap) for n in (1, 2)}
        return CheckRecord(
            id="aff.quotient_dimensions",
            anchor="Let $\\mathcal{T} := \\mathcal{A}_{ff} / \\mathcal{I}",
            verdict=Verdict.INFO,
            inputs={"points": [p.to_json() for p in points]},
            details=dims,
        )

    def run_all(self) -> List[CheckRecord]:
        count = self.samples()
        records = det_tau_check(self.samples("gamma"), self.config.seed + 99)
        records += self.classification_records(count)
        records += self.both_zero_records(count)
        records += self.irreducibility_records()
        records.append(self.dimension_record())
        records += power_of_two_probe(2 * count, self.config.seed + 140, degree_cap=self.degree_cap)
        logger.info(f"aff suite: {len(records)} records")
        return records

    def classify(self, params: Dict[str, Any]) -> List[CheckRecord]:
        """Two explicit points, or every kernel case on engineered pairs"""
        if params.get("points") is None:
            return self.classification_records(self.samples())
        points = self._points(params, 2)
        if len(points) != 2:
            raise ConfigError("classify takes exactly two points", key="points")
        return classify_check(points[0], points[1], 0, self.degree_cap)

    def braiding(self, params: Dict[str, Any]) -> List[CheckRecord]:
        """Points (x, y, w) with y∘x⁻¹ in the BothZero case"""
        if params.get("points") is None:
            return self.both_zero_records(1)
        points = self._points(params, 3)
        if len(points) != 3:
            raise ConfigError("braiding takes exactly three points x, y, w", key="points")
        x, y, w = points
        try:
            return uxy_check(x, y, 0, self.degree_cap) + braiding_check(x, y, w, 0, self.degree_cap)
        except WrongCase as e:
            raise ConfigError(str(e), key="points") from e

    def tensor_irr(self, params: Dict[str, Any]) -> List[CheckRecord]:
        if params.get("points") is None:
            return self.irreducibility_records()
        points = self._points(params, 1)
        try:
            records = tensor_irreducibility(points, 0, self.degree_cap)
        except DimensionMismatch as e:
            raise ConfigError(str(e), key="points") from e
        if len(points) <= INDEPENDENCE_MAX:
            records += linear_independence_probe(points, False, 0, self.degree_cap)
            records += linear_independence_probe(points, True, 0, self.degree_cap)
        return records

    def probe_pow2(self, params: Dict[str, Any]) -> List[CheckRecord]:
        samples = int(params.get("samples") or 2 * self.samples())
        return power_of_two_probe(samples, self.config.seed + 140, degree_cap=self.degree_cap)

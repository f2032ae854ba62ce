"""
Duality suite
U_q(ŝl2) relations on evaluation modules and the pairing with the affine FRT bialgebra
"""

from typing import Any, Dict, List

from src.frt_lab.algebra.rmatrix_zoo import MULTIPLICATIVE_LAW
from src.frt_lab.algebra.uq_duality import (
    PAIRING_ANCHOR,
    bialgebra_compatibility_check,
    capped_words,
    check_uq_relations,
    eval_rep,
    monomials_up_to,
    pairing_gram_rank,
    pairing_well_defined,
    printed_pairing_identities,
)
from src.frt_lab.algebra.scalar_field import format_scalar, parse_scalar
from src.frt_lab.services.base_suite import Suite
from src.frt_lab.services.points import load_json_list, parse_scalar_points
from src.frt_lab.core.errors import BadEntry, ConfigError, FrtLabError
from src.frt_lab.core.logging import logger
from src.frt_lab.models.frt_models import ParamSlate
from src.frt_lab.models.report_models import CheckRecord, Verdict

EVAL_DEGREES = (1, 2, 3)


class DualitySuite(Suite):
    name = "duality"
    actions = {"pair": "pair", "well-defined": "well_defined", "check-rep": "check_rep"}

    def _slate(self, params: Dict[str, Any], count: int = 2, offset: int = 60) -> ParamSlate:
        text = params.get("points")
        if text is None:
            points = self.sampler(offset).generics(count)
        else:
            points = parse_scalar_points(load_json_list(text), self.field)
            if len(set(points)) != len(points) or any(not p for p in points):
                raise ConfigError("points must be distinct and nonzero", key="points")
        return ParamSlate(tuple(points), MULTIPLICATIVE_LAW, self.field)

    def _scalar_param(self, params: Dict[str, Any], key: str, default):
        text = params.get(key)
        if text is None:
            return default
        try:
            value = parse_scalar(str(text), self.field, require_lowest_terms=True)
        except FrtLabError as e:
            raise ConfigError(str(e), key=key) from e
        if not value:
            raise ConfigError(f"{key} must be nonzero", key=key)
        return value

    def _int_param(self, params: Dict[str, Any], key: str, default: int, low: int = 0) -> int:
        value = params.get(key)
        if value is None:
            return default
        value = int(value)
        if value < low:
            raise ConfigError(f"{key} must be at least {low}", key=key)
        return value

    def run_all(self) -> List[CheckRecord]:
        self.require_generic_q()
        records: List[CheckRecord] = []
        for k in range(self.samples()):
            slate = self._slate({}, offset=60 + k)
            batch = pairing_well_defined(slate, self.q, max_degree=3)
            batch += bialgebra_compatibility_check(slate, self.q, seed=self.config.seed + k)
            for record in batch:
                record.id = f"{record.id}[{k:02d}]"
            records += batch
        x, y = self.sampler(70).generics(2)
        records += printed_pairing_identities(self.q, x, y)
        a = self.sampler(71).generic()
        for r in EVAL_DEGREES:
            records += check_uq_relations(eval_rep(a, r, self.q))
        logger.info(f"duality suite: {len(records)} records")
        return records

    def pair(self, params: Dict[str, Any]) -> List[CheckRecord]:
        """Exact rank of the finite pairing matrix; a probe, never a non-degeneracy claim"""
        self.require_generic_q()
        slate = self._slate(params)
        max_degree = self._int_param(params, "max_degree", 2, low=1)
        words = list(capped_words(max_degree))
        monomials = monomials_up_to(slate, max_degree)
        gram = pairing_gram_rank(slate, self.q, words, monomials)
        return [CheckRecord(
            id=f"duality.pairing.gram_rank.d{max_degree}",
            anchor=PAIRING_ANCHOR,
            verdict=Verdict.INFO,
            inputs={"q": format_scalar(self.q), "slate": slate.to_json(), "max_degree": max_degree},
            details={"words": len(words), "monomials": len(monomials), "rank": gram},
        )]

    def well_defined(self, params: Dict[str, Any]) -> List[CheckRecord]:
        self.require_generic_q()
        slate = self._slate(params)
        max_degree = self._int_param(params, "max_degree", 3, low=2)
        return pairing_well_defined(slate, self.q, max_degree=max_degree)

    def check_rep(self, params: Dict[str, Any]) -> List[CheckRecord]:
        """Relations of U_q(ŝl2) on V_a(r)"""
        a = self._scalar_param(params, "a", self.field.one)
        r = self._int_param(params, "r", 1)
        try:
            rep = eval_rep(a, r, self.q)
        except BadEntry as e:
            raise ConfigError(str(e), key="r" if a else "a") from e
        return check_uq_relations(rep)

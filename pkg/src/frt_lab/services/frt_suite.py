"""
FRT suite
Relation sets, graded components, subcomodule lattices and the commutation relations at (x, q²x)
"""

from typing import Any, Dict, List, Sequence, Tuple

from src.frt_lab.algebra.exact_linalg import identity, kernel
from src.frt_lab.algebra.frt_engine import (
    HOM_ANCHOR,
    RELATIONS_ANCHOR,
    coaction_matrices,
    generate_relations,
    graded_component,
    hom_record,
    subcomodule_solve,
    verify_commutation_relations,
)
from src.frt_lab.algebra.rmatrix_zoo import family_provider, sample_gamma, tau_r
from src.frt_lab.algebra.scalar_field import format_scalar, spow
from src.frt_lab.services.base_suite import Suite
from src.frt_lab.services.points import load_json_list, parse_gamma_points, parse_scalar_points
from src.frt_lab.core.errors import ConfigError
from src.frt_lab.core.logging import logger
from src.frt_lab.models.frt_models import ParamSlate, StrikeMode
from src.frt_lab.models.report_models import CheckRecord, Verdict
from src.frt_lab.models.rmatrix_models import RFamily
from src.frt_lab.tools.lattice_graph import lattice_to_json

FAMILIES = (RFamily.AFFINE_SL2, RFamily.FREE_FERMION)
GENERIC_DIM_ANCHOR = "generated by elements $\\{1, t_{ij}(x) \\}$"


class FrtSuite(Suite):
    name = "frt"
    actions = {"relations": "relations", "component": "component", "subcomodules": "subcomodules"}

    def _family(self) -> RFamily:
        family = RFamily.from_string(self.config.family) if self.config.family else RFamily.AFFINE_SL2
        if family not in FAMILIES:
            raise ConfigError(f"the frt suite supports {[f.value for f in FAMILIES]}", key="family")
        return family

    def _slate(self, family: RFamily, points: Sequence[Any]) -> ParamSlate:
        _, law = family_provider(family, self.q, self.field)
        return ParamSlate(tuple(points), law, self.field)

    def _random_points(self, family: RFamily, count: int, offset: int) -> List[Any]:
        sampler = self.sampler(offset, with_q=family is RFamily.AFFINE_SL2)
        if family is RFamily.AFFINE_SL2:
            return sampler.generics(count)
        points: List[Any] = []
        while len(points) < count:
            g = sample_gamma(sampler)
            if g not in points:
                points.append(g)
        return points

    def _points_param(self, family: RFamily, params: Dict[str, Any], default: int) -> List[Any]:
        text = params.get("points")
        if text is None:
            return self._random_points(family, default, 40)
        items = load_json_list(text)
        if family is RFamily.AFFINE_SL2:
            return parse_scalar_points(items, self.field)
        return parse_gamma_points(items, self.field)

    # -- full run -------------------------------------------------------

    def generic_dimension_records(self, family: RFamily, count: int) -> List[CheckRecord]:
        """Degree-2 component of two generic points is 16-dimensional"""
        provider, _ = family_provider(family, self.q, self.field)
        records = []
        for k in range(count):
            slate = self._slate(family, self._random_points(family, 2, 10 + k))
            rels = generate_relations(provider, slate, family)
            gc = graded_component(rels, 2, degree_cap=self.degree_cap)
            ok = gc.dim == 16 and len(rels) == 32
            records.append(CheckRecord(
                id=f"frt.{family.value}.degree2_dim[{k:02d}]",
                anchor=GENERIC_DIM_ANCHOR,
                verdict=Verdict.PASS if ok else Verdict.FAIL,
                inputs={"slate": slate.to_json()},
                witness=None if ok else {"dim": gc.dim, "relations": len(rels)},
                details={"dim": gc.dim, "relation_rank": gc.relation_rank, "relations": len(rels)},
            ))
        return records

    def tau_hom_records(self, family: RFamily, count: int) -> List[CheckRecord]:
        """τR(y∘x⁻¹): V_x⊗V_y → V_y⊗V_x is a comodule map; a perturbed matrix is not"""
        provider, _ = family_provider(family, self.q, self.field)
        records = []
        for k in range(count):
            slate = self._slate(family, self._random_points(family, 2, 20 + k))
            rels = generate_relations(provider, slate, family)
            gc = graded_component(rels, 2, degree_cap=self.degree_cap)
            src = coaction_matrices([0, 1], gc)
            dst = coaction_matrices([1, 0], gc)
            f = tau_r(provider(slate.quotient(0, 1)))
            inputs = {"slate": slate.to_json()}
            records.append(hom_record(f"frt.{family.value}.tau_r_hom[{k:02d}]", f, src, dst, inputs))
            perturbed = f + identity(4, self.field).to_dense()
            records.append(hom_record(f"frt.{family.value}.tau_r_perturbed[{k:02d}]", perturbed, src, dst,
                                      inputs, expect=False))
        return records

    def lattice_records(self) -> List[CheckRecord]:
        """V_x⊗V_y for the affine family: irreducible at generic ratios, reducible at y = q^{±2}x"""
        self.require_generic_q()
        provider, _ = family_provider(RFamily.AFFINE_SL2, self.q, self.field)
        x = self.sampler(30).generic()
        cases: List[Tuple[str, Any, bool]] = [
            ("generic", self.sampler(31).generic(avoid=[x]), False),
            ("ratio_q2", x * spow(self.q, 2), True),
            ("ratio_qm2", x * spow(self.q, -2), True),
        ]
        records = []
        for label, y, reducible in cases:
            slate = self._slate(RFamily.AFFINE_SL2, (x, y))
            gc = graded_component(generate_relations(provider, slate, RFamily.AFFINE_SL2), 2,
                                  degree_cap=self.degree_cap)
            forward = tau_r(provider(slate.quotient(0, 1)))
            backward = tau_r(provider(slate.quotient(1, 0)))
            lattice = subcomodule_solve(coaction_matrices([0, 1], gc), maps_out=[forward], maps_in=[backward])
            proper = [s for s in lattice if not s.is_trivial]
            ker = kernel(forward)
            ok = bool(proper) == reducible
            records.append(CheckRecord(
                id=f"frt.affine_sl2.lattice.{label}",
                anchor=HOM_ANCHOR,
                verdict=Verdict.PASS if ok else Verdict.FAIL,
                inputs={"slate": slate.to_json(), "q": format_scalar(self.q)},
                witness=None if ok else {"proper_dims": [s.dim for s in proper]},
                details={
                    "proper_dims": sorted(s.dim for s in proper),
                    "tau_r_kernel_dim": ker.dim,
                    "lattice": lattice_to_json(lattice),
                },
            ))
        return records

    def run_all(self) -> List[CheckRecord]:
        self.require_generic_q()
        count = self.samples()
        records: List[CheckRecord] = []
        for family in FAMILIES:
            records += self.generic_dimension_records(family, count)
            records += self.tau_hom_records(family, 1)
        records += self.lattice_records()
        provider, law = family_provider(RFamily.AFFINE_SL2, self.q, self.field)
        sampler = self.sampler(50)
        for k in range(count):
            for record in verify_commutation_relations(self.q, sampler.generic(), provider, law, self.degree_cap):
                record.id = f"{record.id}[{k:02d}]"
                records.append(record)
        logger.info(f"frt suite: {len(records)} records")
        return records

    # -- single actions -------------------------------------------------

    def relations(self, params: Dict[str, Any]) -> List[CheckRecord]:
        family = self._family()
        provider, _ = family_provider(family, self.q, self.field)
        slate = self._slate(family, self._points_param(family, params, 2))
        rels = generate_relations(provider, slate, family)
        return [CheckRecord(
            id=f"frt.{family.value}.relations",
            anchor=RELATIONS_ANCHOR,
            verdict=Verdict.INFO,
            inputs={"slate": slate.to_json()},
            details={"count": len(rels), "nonzero": len(rels.nonzero()), "relations": rels.to_json()},
        )]

    def component(self, params: Dict[str, Any]) -> List[CheckRecord]:
        family = self._family()
        provider, _ = family_provider(family, self.q, self.field)
        slate = self._slate(family, self._points_param(family, params, 2))
        degree = int(params.get("degree") or len(slate))
        strike = StrikeMode(params.get("strike") or "A")
        rels = generate_relations(provider, slate, family)
        gc = graded_component(rels, degree, degree_cap=self.degree_cap, strike=strike)
        return [CheckRecord(
            id=f"frt.{family.value}.component.n{degree}",
            anchor=RELATIONS_ANCHOR,
            verdict=Verdict.INFO,
            inputs={"slate": slate.to_json(), "degree": degree, "strike": strike.value},
            details=gc.to_json(),
        )]

    def subcomodules(self, params: Dict[str, Any]) -> List[CheckRecord]:
        family = self._family()
        provider, _ = family_provider(family, self.q, self.field)
        slate = self._slate(family, self._points_param(family, params, 2))
        degree = len(slate)
        rels = generate_relations(provider, slate, family)
        gc = graded_component(rels, degree, degree_cap=self.degree_cap)
        diag = graded_component(rels, degree, degree_cap=self.degree_cap, strike=StrikeMode.DIAGONAL)
        points = list(range(degree))
        lattice = subcomodule_solve(coaction_matrices(points, gc), coaction_matrices(points, diag))
        return [CheckRecord(
            id=f"frt.{family.value}.subcomodules.n{degree}",
            anchor=HOM_ANCHOR,
            verdict=Verdict.INFO,
            inputs={"slate": slate.to_json()},
            details={
                "proper": [s.to_json() for s in lattice if not s.is_trivial],
                "lattice": lattice_to_json(lattice),
            },
        )]

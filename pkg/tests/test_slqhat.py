"""
Evaluation comodules W_a(r), their dual action, the antipode, det_q and reducibility of tensor products
"""

import pytest

from src.frt_lab.algebra.scalar_field import RATIONAL, spow
from src.frt_lab.algebra.slqhat import (
    antipode_check,
    build_W,
    cg_dimensions,
    cg_partial_sums,
    detq_grouplike_check,
    dual_action_check,
    dual_comodule_check,
    g_exponent,
    predicted_ratios,
    reducibility_scan,
    reducibility_verdict,
    w_closure_check,
    w_points,
)
from src.frt_lab.core.errors import BadEntry, DegreeTooLarge, DimensionMismatch
from src.frt_lab.models.report_models import Irreducibility, Verdict


def by_id(records):
    return {r.id: r for r in records}


@pytest.mark.unit
class TestWeights:
    def test_g_exponent_counts_inversions(self):
        assert g_exponent((1, 1, 1)) == 0
        assert g_exponent((2, 1, 1)) == 2
        assert g_exponent((1, 2, 1)) == 1
        assert g_exponent((2, 2, 1)) == 2
        with pytest.raises(BadEntry):
            g_exponent((1, 3))

    def test_points_are_a_q_string(self, q):
        a = RATIONAL.from_ints(5)
        points = w_points(a, 3, q)
        assert points == (spow(q, -2) * a, a, spow(q, 2) * a)
        assert w_points(a, 0, q) == (a,)

    def test_clebsch_gordan_dimensions(self):
        assert cg_dimensions(1, 2) == [4, 2]
        assert cg_dimensions(2, 2) == [5, 3, 1]
        assert cg_partial_sums(1, 1) == [0, 1, 3, 4]

    def test_predicted_ratios(self, q):
        assert predicted_ratios(1, 1, q) == [spow(q, -2), spow(q, 2)]
        assert predicted_ratios(1, 2, q) == [spow(q, -3), spow(q, 3)]


@pytest.mark.unit
class TestEvaluationComodule:
    def test_build_shapes(self, q):
        W = build_W(RATIONAL.from_ints(2), 2, q)
        assert W.dim == 3
        assert len(W.vectors) == 3 and all(len(v) == 4 for v in W.vectors)
        assert len(W.slate) == 2

    def test_degree_cap_and_zero_parameter(self, q):
        with pytest.raises(DegreeTooLarge):
            build_W(RATIONAL.from_ints(2), 5, q, degree_cap=4)
        with pytest.raises(BadEntry):
            build_W(RATIONAL.zero, 1, q)

    @pytest.mark.parametrize("r", [1, 2])
    def test_closure_records(self, q, r):
        W = build_W(RATIONAL.from_ints(7, 2), r, q)
        records = by_id(w_closure_check(W))
        label = f"W_7/2({r})"
        assert records[f"slqhat.W.{label}.closed"].verdict is Verdict.PASS
        assert records[f"slqhat.W.{label}.highest_weight"].verdict is Verdict.PASS
        assert records[f"slqhat.W.{label}.in_lattice"].verdict is Verdict.PASS

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_dual_action_matches_evaluation_module(self, q, r):
        records = dual_action_check(build_W(RATIONAL.from_ints(2), r, q))
        assert all(rec.verdict is not Verdict.FAIL for rec in records)
        assert records[0].id == f"slqhat.dual_action.W_2({r}).raw"


@pytest.mark.unit
class TestDeterminantAndAntipode:
    def test_antipode_axioms(self, q):
        records = antipode_check(RATIONAL.from_ints(5), q, probe_degree=2)
        assert [r.id for r in records] == ["slqhat.antipode.pairing", "slqhat.antipode.normal_form"]
        assert all(r.verdict is Verdict.PASS for r in records)

    def test_detq_is_grouplike(self, q):
        records = detq_grouplike_check(RATIONAL.from_ints(5), q, max_len=1)
        assert all(r.verdict is Verdict.PASS for r in records)


@pytest.mark.unit
class TestReducibility:
    def test_predicted_ratio_is_reducible(self, q):
        verdict, witness, _ = reducibility_verdict(1, 1, spow(q, 2), q)
        assert verdict is Irreducibility.REDUCIBLE
        assert witness.dim in (1, 3)

    def test_generic_ratio_is_irreducible(self, q):
        verdict, witness, span = reducibility_verdict(1, 1, RATIONAL.from_ints(5), q)
        assert verdict is Irreducibility.IRREDUCIBLE
        assert witness is None and span == 16

    def test_scan_with_controls(self, q):
        records = reducibility_scan(1, 1, None, q, controls=2, seed=5)
        assert len(records) == 4
        assert all(r.verdict is Verdict.PASS for r in records)
        assert sum(r.details["predicted_reducible"] for r in records) == 2

    def test_scan_at_explicit_ratios(self, q):
        records = reducibility_scan(1, 2, [spow(q, 3), RATIONAL.from_ints(5)], q)
        assert [r.details["verdict"] for r in records] == ["REDUCIBLE", "IRREDUCIBLE"]
        assert all(r.verdict is Verdict.PASS for r in records)

    def test_tensor_dimension_bound(self, q):
        with pytest.raises(DimensionMismatch):
            reducibility_verdict(3, 4, RATIONAL.from_ints(5), q)


@pytest.mark.slow
def test_dual_comodule_of_the_standard_comodule(q):
    records = by_id(dual_comodule_check(RATIONAL.from_ints(2), 1, q))
    label = "W_2(1)"
    for suffix in ("snake_left", "snake_right", "ev_is_hom", "coev_is_hom", "tau_r_rank_one", "tau_r_hom"):
        assert records[f"slqhat.dual.{label}.{suffix}"].verdict is Verdict.PASS
    assert records[f"slqhat.dual.{label}.printed_formulas"].verdict is Verdict.INFO
    hom = records[f"slqhat.dual.{label}.hom_space"]
    assert hom.verdict is Verdict.PASS
    assert hom.details["ev_dimension"] == hom.details["coev_dimension"] == 1

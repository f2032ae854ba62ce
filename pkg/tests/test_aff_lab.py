"""
Free-fermionic bialgebra: V_x⊗V_y classification, U_{x,y}, W_{x,y}, the braiding and tensor irreducibility
"""

import pytest

from src.frt_lab.algebra.aff_lab import (
    braiding_check,
    braiding_from_tau,
    braiding_matrix,
    build_Wxy,
    classify_check,
    classify_VxVy,
    criterion_holds,
    det_tau_check,
    engineered_pair,
    expected_subcomodules,
    ff_slate,
    linear_independence_probe,
    power_of_two_probe,
    quotient_dimensions,
    tensor_irreducibility,
    uxy_check,
    wxy_check,
)
from src.frt_lab.algebra.exact_linalg import matrices_equal
from src.frt_lab.algebra.rmatrix_zoo import sample_gamma
from src.frt_lab.core.errors import BadEntry, DimensionMismatch, WrongCase
from src.frt_lab.models.aff_models import CaseLabel
from src.frt_lab.models.report_models import Verdict


def ids(records):
    return {r.id: r for r in records}


@pytest.mark.unit
def test_det_tau_r():
    (record,) = det_tau_check(12, 5)
    assert record.id == "aff.det_tau_r"
    assert record.verdict is Verdict.PASS


@pytest.mark.unit
class TestClassification:
    @pytest.mark.parametrize("case", list(CaseLabel))
    def test_lattice_matches_kernel_case(self, ff_sampler, case):
        x, y = engineered_pair(ff_sampler, case)
        result = classify_VxVy(x, y)
        assert result.case is case
        assert {s.basis for s in result.proper} == {s.basis for s in expected_subcomodules(result.z)}

    @pytest.mark.parametrize("case", list(CaseLabel))
    def test_records_pass(self, ff_sampler, case):
        x, y = engineered_pair(ff_sampler, case)
        records = classify_check(x, y, index=3)
        tag = case.value.lower()
        assert records[0].id == f"aff.classify.{tag}[03]"
        assert all(r.verdict is Verdict.PASS for r in records)
        assert len(records) == (1 if case is CaseLabel.INVERTIBLE else 2)

    def test_case_labels_parse(self):
        assert CaseLabel.from_string("both_zero") is CaseLabel.BOTH_ZERO
        with pytest.raises(BadEntry):
            CaseLabel.from_string("three_zero")

    def test_both_zero_lattice_is_a_chain(self, ff_sampler):
        x, y = engineered_pair(ff_sampler, CaseLabel.BOTH_ZERO)
        result = classify_VxVy(x, y)
        dims = sorted(s.dim for s in result.proper)
        assert dims == [1, 3]
        small, large = sorted(result.proper, key=lambda s: s.dim)
        assert small.is_subspace_of(large)


@pytest.mark.unit
class TestBothZeroComodules:
    def test_uxy(self, ff_sampler):
        x, y = engineered_pair(ff_sampler, CaseLabel.BOTH_ZERO)
        records = ids(uxy_check(x, y))
        assert records["aff.uxy.coefficient[00]"].verdict is Verdict.PASS
        assert records["aff.uxy.counit[00]"].verdict is Verdict.PASS
        assert records["aff.uxy.printed_sign[00]"].verdict is Verdict.INFO

    def test_wxy(self, ff_sampler):
        x, y = engineered_pair(ff_sampler, CaseLabel.BOTH_ZERO)
        records = wxy_check(x, y, index=1)
        assert [r.id for r in records] == ["aff.wxy.quotient_coaction[01]", "aff.wxy.irreducible[01]"]
        assert all(r.verdict is Verdict.PASS for r in records)

    def test_wrong_case_rejected(self, ff_sampler):
        x, y = engineered_pair(ff_sampler, CaseLabel.INVERTIBLE)
        with pytest.raises(WrongCase):
            build_Wxy(x, y)
        with pytest.raises(WrongCase):
            uxy_check(x, y)

    def test_braiding_formula_agrees_with_tau_composite(self, ff_sampler):
        x, y = engineered_pair(ff_sampler, CaseLabel.BOTH_ZERO)
        w = sample_gamma(ff_sampler)
        assert matrices_equal(braiding_matrix(x, y, w), braiding_from_tau(x, y, w))

    @pytest.mark.slow
    def test_braiding_is_a_comodule_map(self, ff_sampler):
        x, y = engineered_pair(ff_sampler, CaseLabel.BOTH_ZERO)
        w = sample_gamma(ff_sampler)
        records = ids(braiding_check(x, y, w))
        assert records["aff.braiding.hom[00]"].verdict is Verdict.PASS
        assert records["aff.braiding.perturbed_control[00]"].verdict is Verdict.PASS
        assert records["aff.braiding.matches_tau_composite[00]"].verdict is Verdict.PASS


@pytest.mark.unit
class TestTensorIrreducibility:
    def test_generic_pair(self, ff_sampler):
        points = [sample_gamma(ff_sampler) for _ in range(2)]
        (record,) = tensor_irreducibility(points)
        assert record.verdict is Verdict.PASS
        assert record.details["criterion_irreducible"] is True

    def test_degenerate_pair_is_reducible(self, ff_sampler):
        x, y = engineered_pair(ff_sampler, CaseLabel.A2_ZERO)
        holds, bad = criterion_holds(ff_slate((x, y)))
        assert not holds and bad == [[0, 1]]
        (record,) = tensor_irreducibility([x, y])
        assert record.verdict is Verdict.PASS
        assert record.details["brute_force"] == "REDUCIBLE"

    @pytest.mark.slow
    def test_three_generic_points(self, ff_sampler):
        points = [sample_gamma(ff_sampler) for _ in range(3)]
        (record,) = tensor_irreducibility(points)
        assert record.verdict is Verdict.PASS

    def test_large_slates_use_the_criterion_only(self, ff_sampler):
        points = [sample_gamma(ff_sampler) for _ in range(5)]
        (record,) = tensor_irreducibility(points)
        assert record.verdict is Verdict.INFO
        assert "brute_force" not in record.details

    def test_factor_limit(self, ff_sampler):
        points = [sample_gamma(ff_sampler) for _ in range(9)]
        with pytest.raises(DimensionMismatch):
            tensor_irreducibility(points)


@pytest.mark.unit
class TestQuotients:
    def test_full_products_independent_at_generic_points(self, ff_sampler):
        points = [sample_gamma(ff_sampler) for _ in range(2)]
        (record,) = linear_independence_probe(points, diagonal_only=False)
        assert record.verdict is Verdict.PASS
        assert record.details["rank"] == 16

    @pytest.mark.parametrize("n", [2, 3])
    def test_diagonal_products_collapse_to_t22_count(self, ff_sampler, n):
        points = [sample_gamma(ff_sampler) for _ in range(n)]
        assert criterion_holds(ff_slate(points))[0]
        records = ids(linear_independence_probe(points, diagonal_only=True))
        measured = records[f"aff.independence.diagonal.n{n}[00]"]
        assert measured.verdict is Verdict.PASS
        assert measured.details["rank"] == n + 1
        assert measured.details["rank"] <= measured.details["rank_in_A"]
        printed = records[f"aff.independence.diagonal_printed.n{n}[00]"]
        assert printed.verdict is Verdict.INFO
        assert printed.details["printed_rank"] == 2 ** n

    def test_diagonal_words_span_the_t_component(self, ff_sampler):
        points = [sample_gamma(ff_sampler) for _ in range(2)]
        records = ids(linear_independence_probe(points, diagonal_only=True))
        record = records["aff.independence.t_dimension.n2[00]"]
        assert record.verdict is Verdict.PASS
        assert record.details["diagonal_word_rank"] == record.details["component_dim"]
        assert record.details["component_dim"] == quotient_dimensions(points, 2)["T"]

    def test_quotient_dimensions(self, ff_sampler):
        points = [sample_gamma(ff_sampler) for _ in range(2)]
        dims = quotient_dimensions(points, 2)
        assert set(dims) == {"A", "B+", "B-", "T"}
        assert dims["A"] == 16
        assert dims["T"] <= dims["B+"] <= dims["A"]


@pytest.mark.slow
def test_power_of_two_conjecture_is_informational():
    (record,) = power_of_two_probe(4, 11)
    assert record.verdict is Verdict.INFO
    assert len(record.details["observations"]) == 4

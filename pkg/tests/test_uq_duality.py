"""
Quantum affine sl2 side: Hopf structure on words, evaluation modules and the pairing with the FRT bialgebra
"""

import pytest

from src.frt_lab.algebra.exact_linalg import identity, matrices_equal
from src.frt_lab.algebra.rmatrix_zoo import MULTIPLICATIVE_LAW
from src.frt_lab.algebra.scalar_field import RATIONAL, inv
from src.frt_lab.core.errors import BadEntry, DegreeTooLarge, DimensionMismatch
from src.frt_lab.algebra.uq_duality import (
    SlatePairing,
    antipode_U,
    bialgebra_compatibility_check,
    capped_words,
    check_uq_relations,
    coproduct,
    counit,
    eval_rep,
    monomials_up_to,
    pairing,
    pairing_gram_rank,
    pairing_well_defined,
    printed_pairing_identities,
    tensor_rep,
)
from src.frt_lab.models.frt_models import NCPolynomial, ParamSlate
from src.frt_lab.models.report_models import Verdict
from src.frt_lab.models.uq_models import UElement, ULetter


def element_matrix(u, rep):
    total = identity(rep.dim, RATIONAL).to_dense() * RATIONAL.zero
    for (word,), c in u.terms.items():
        total = total + rep.word_matrix(word) * c
    return total


@pytest.mark.unit
class TestHopfStructure:
    def test_counit_values(self):
        assert counit(UElement.unit(RATIONAL)) == 1
        assert counit(UElement.word(RATIONAL, (ULetter.K1, ULetter.K0_INV))) == 1
        assert counit(UElement.word(RATIONAL, (ULetter.E1, ULetter.K1))) == 0

    def test_coproduct_of_grouplike(self):
        K = UElement.word(RATIONAL, (ULetter.K1,))
        assert coproduct(K, 2) == UElement(RATIONAL, 2, {((ULetter.K1,), (ULetter.K1,)): RATIONAL.one})
        assert coproduct(K, 3).legs == 3

    @pytest.mark.parametrize("letter", list(ULetter))
    def test_antipode_axiom_on_a_module(self, q, letter):
        """m(S⊗1)Δ(u) = ε(u)·1 evaluated on V_2(2)"""
        rep = eval_rep(RATIONAL.from_ints(2), 2, q)
        u = UElement.word(RATIONAL, (letter,))
        total = identity(rep.dim, RATIONAL).to_dense() * RATIONAL.zero
        for (w1, w2), c in coproduct(u, 2).terms.items():
            left = element_matrix(antipode_U(UElement.word(RATIONAL, w1)), rep)
            total = total + left * rep.word_matrix(w2) * c
        expected = identity(rep.dim, RATIONAL).to_dense() * counit(u)
        assert matrices_equal(total, expected)


@pytest.mark.unit
class TestEvaluationModules:
    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_relations_hold(self, q, r):
        records = check_uq_relations(eval_rep(RATIONAL.from_ints(5, 2), r, q))
        failed = [rec.id for rec in records if rec.verdict is Verdict.FAIL]
        assert not failed
        assert any(rec.id.endswith("serre_unsigned") and rec.verdict is Verdict.INFO for rec in records)

    def test_tensor_product_is_a_module(self, q):
        reps = [eval_rep(RATIONAL.from_ints(2), 1, q), eval_rep(RATIONAL.from_ints(7), 1, q)]
        records = check_uq_relations(tensor_rep(reps), q, label="V2xV7")
        assert all(rec.verdict is not Verdict.FAIL for rec in records)

    def test_bad_evaluation_data_rejected(self, q):
        with pytest.raises(BadEntry):
            eval_rep(RATIONAL.zero, 1, q)
        with pytest.raises(BadEntry):
            eval_rep(RATIONAL.from_ints(2), -1, q)

    def test_coproduct_needs_a_leg(self):
        with pytest.raises(DimensionMismatch):
            coproduct(UElement.word(RATIONAL, (ULetter.E1,)), 0)

    def test_weights_of_the_standard_module(self, q):
        rep = eval_rep(RATIONAL.from_ints(4), 1, q)
        k = rep[ULetter.K1].to_list()
        assert k[0][0] == q and k[1][1] == inv(q)


@pytest.mark.unit
class TestPairing:
    def test_generators_pair_with_matrix_entries(self, q):
        slate = ParamSlate((RATIONAL.from_ints(2),), MULTIPLICATIVE_LAW, RATIONAL)
        K = UElement.word(RATIONAL, (ULetter.K1,))
        e = UElement.word(RATIONAL, (ULetter.E1,))
        t11 = NCPolynomial.generator(RATIONAL, 1, 1, 0)
        t12 = NCPolynomial.generator(RATIONAL, 1, 2, 0)
        assert pairing(K, t11, slate, q) == q
        assert pairing(e, t12, slate, q) == 1
        assert pairing(e, t11, slate, q) == 0

    def test_evaluators_agree_on_degree_two(self, q, sampler):
        slate = ParamSlate(tuple(sampler.generics(2)), MULTIPLICATIVE_LAW, RATIONAL)
        model = SlatePairing(slate, q)
        words = list(capped_words(2))[:40]
        for mono in monomials_up_to(slate, 2)[:30]:
            t = NCPolynomial.monomial(RATIONAL, mono)
            for w in words:
                assert model.pair_word(w, t) == pairing(UElement.word(RATIONAL, w), t, slate, q)

    def test_gram_rank_is_positive(self, q, sampler):
        slate = ParamSlate(tuple(sampler.generics(2)), MULTIPLICATIVE_LAW, RATIONAL)
        words = list(capped_words(1))
        assert pairing_gram_rank(slate, q, words, monomials_up_to(slate, 1)) > 1
        assert pairing_gram_rank(slate, q, words, []) == 0

    def test_max_degree_bound(self, q, sampler):
        slate = ParamSlate(tuple(sampler.generics(2)), MULTIPLICATIVE_LAW, RATIONAL)
        with pytest.raises(DegreeTooLarge):
            pairing_well_defined(slate, q, max_degree=1)


@pytest.mark.slow
def test_pairing_well_defined_on_generic_pair(q, sampler):
    slate = ParamSlate(tuple(sampler.generics(2)), MULTIPLICATIVE_LAW, RATIONAL)
    records = pairing_well_defined(slate, q, max_degree=3)
    assert records and all(r.verdict is Verdict.PASS for r in records)


@pytest.mark.slow
def test_bialgebra_compatibility(q, sampler):
    slate = ParamSlate(tuple(sampler.generics(2)), MULTIPLICATIVE_LAW, RATIONAL)
    records = bialgebra_compatibility_check(slate, q, samples=25, seed=3)
    assert {r.id for r in records} == {"duality.bialgebra.product_rule", "duality.bialgebra.evaluators_agree"}
    assert all(r.verdict is Verdict.PASS for r in records)


def test_printed_identities(q):
    records = {r.id: r for r in printed_pairing_identities(q, RATIONAL.from_ints(2), RATIONAL.from_ints(11))}
    assert records["duality.printed.sample_relation_in_ideal"].verdict is Verdict.PASS
    assert records["duality.printed.f1"].verdict is Verdict.PASS
    assert records["duality.printed.e0_derived"].verdict is Verdict.PASS
    printed = records["duality.printed.e0_as_printed"]
    assert printed.verdict is Verdict.INFO
    assert printed.details["printed_is_zero"] is False

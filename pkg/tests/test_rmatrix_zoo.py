"""
R-matrix families, the group Γ and the parametrized Yang-Baxter harness
"""

import pytest

from src.frt_lab.algebra.exact_linalg import flip_matrix, matrices_equal, rank
from src.frt_lab.algebra.rmatrix_zoo import (
    GAMMA_LAW,
    MULTIPLICATIVE_LAW,
    check_pybe,
    element_with_quotient,
    family_provider,
    gamma_from_rmatrix,
    gamma_from_weights,
    gamma_identity,
    gamma_inv,
    gamma_mul,
    perturbed_provider,
    r_affine_sl2,
    r_gamma_ice,
    r_perk_schultz,
    rq_rank_profile,
    sample_gamma,
    tau_r,
    ybe_residual,
)
from src.frt_lab.algebra.scalar_field import (
    GAUSSIAN,
    RATIONAL,
    QSpecialization,
    ScalarSampler,
    format_scalar,
    inv,
    spow,
)
from src.frt_lab.core.errors import NotFreeFermionic, Singular
from src.frt_lab.models.aff_models import CaseLabel
from src.frt_lab.models.report_models import Verdict
from src.frt_lab.models.rmatrix_models import RFamily

pytestmark = pytest.mark.unit


class TestGamma:
    def test_weights_validated(self):
        with pytest.raises(NotFreeFermionic):
            gamma_from_weights(*(RATIONAL.from_ints(v) for v in (1, 1, 1, 1, 1, 1)))
        with pytest.raises(NotFreeFermionic):
            gamma_from_weights(*(RATIONAL.from_ints(v) for v in (1, 1, 1, 1, 2, 0)))

    @pytest.mark.parametrize("weights", [(1, 0, 0, 0, 1, 0), (0, 1, 0, 0, 0, 1), (1, 0, 1, 0, 0, 1)])
    def test_singular_free_fermionic_weights(self, weights):
        with pytest.raises(Singular):
            gamma_from_weights(*(RATIONAL.from_ints(v) for v in weights))

    def test_group_law(self, ff_sampler):
        e = gamma_identity(RATIONAL)
        for _ in range(20):
            x, y, w = (sample_gamma(ff_sampler) for _ in range(3))
            assert gamma_mul(x, e) == x == gamma_mul(e, x)
            assert gamma_mul(x, gamma_inv(x)) == e
            assert gamma_mul(gamma_mul(x, y), w) == gamma_mul(x, gamma_mul(y, w))

    def test_element_with_quotient(self, ff_sampler):
        x = sample_gamma(ff_sampler)
        z = sample_gamma(ff_sampler, CaseLabel.BOTH_ZERO)
        y = element_with_quotient(x, z)
        assert GAMMA_LAW.quotient(x, y) == z

    @pytest.mark.parametrize("case", list(CaseLabel))
    def test_sampled_cases(self, ff_sampler, case):
        g = sample_gamma(ff_sampler, case)
        assert CaseLabel.of(g) is case


class TestFamilies:
    def test_affine_rank_degeneracies(self, q):
        profile = rq_rank_profile(q)
        assert profile[format_scalar(spow(q, 2))] == 1
        assert profile[format_scalar(spow(q, -2))] == 3

    def test_affine_at_one_is_scaled_flip(self, q):
        R = r_affine_sl2(q, RATIONAL.one).matrix
        assert matrices_equal(R, flip_matrix(2) * (q - inv(q)))

    def test_tau_r_is_flip_times_r(self, q):
        R = r_affine_sl2(q, RATIONAL.from_ints(5)).matrix
        assert matrices_equal(tau_r(R), flip_matrix(2) * R)
        assert rank(tau_r(R)) == 4

    def test_gaussian_specialization_embeds(self):
        for sign in (1, -1):
            q = QSpecialization.free_fermionic(sign).q
            g = gamma_from_rmatrix(r_affine_sl2(q, GAUSSIAN.from_ints(3, 7)))
            assert g.field == GAUSSIAN

    def test_generic_affine_is_not_free_fermionic(self, q):
        with pytest.raises(NotFreeFermionic):
            gamma_from_rmatrix(r_affine_sl2(q, RATIONAL.from_ints(5)))

    def test_perk_schultz_and_ice_embed(self, q):
        gamma_from_rmatrix(r_perk_schultz(q, RATIONAL.from_ints(2, 7)))
        gamma_from_rmatrix(r_gamma_ice(RATIONAL.from_ints(3), RATIONAL.from_ints(-4, 5)))


class TestYangBaxter:
    def test_affine_residuals_vanish(self, sampler, q):
        provider, law = family_provider(RFamily.AFFINE_SL2, q)
        pairs = [(sampler.generic(), sampler.generic()) for _ in range(5)]
        pairs.append((spow(q, 2), sampler.generic()))
        records = check_pybe(provider, law, pairs, family="affine_sl2")
        assert all(r.verdict is Verdict.PASS for r in records)
        assert records[0].id == "ybe.affine_sl2.residual[000]"

    def test_free_fermion_residuals_vanish(self, ff_sampler):
        provider, law = family_provider(RFamily.FREE_FERMION)
        for _ in range(5):
            a, b = sample_gamma(ff_sampler), sample_gamma(ff_sampler, CaseLabel.A1_ZERO)
            assert ybe_residual(provider, law, a, b).is_zero_matrix

    def test_perturbed_provider_breaks_ybe(self, ff_sampler):
        provider, law = family_provider(RFamily.FREE_FERMION)
        broken = perturbed_provider(provider, 0, 0)
        pairs = [(sample_gamma(ff_sampler), sample_gamma(ff_sampler)) for _ in range(3)]
        records = check_pybe(broken, law, pairs, family="broken")
        assert any(r.verdict is Verdict.FAIL for r in records)
        failed = [r for r in records if r.verdict is Verdict.FAIL][0]
        assert failed.witness is not None

    def test_multiplicative_law_quotient(self):
        x, y = RATIONAL.from_ints(2), RATIONAL.from_ints(10)
        assert MULTIPLICATIVE_LAW.quotient(x, y) == RATIONAL.from_ints(5)


def test_sampler_field_carries_to_gamma():
    g = sample_gamma(ScalarSampler(3, GAUSSIAN))
    assert g.field == GAUSSIAN

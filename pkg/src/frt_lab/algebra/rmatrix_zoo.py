"""
@file_name: rmatrix_zoo.py
@author: frtlab
@date: 2025-07-05
@description: The free-fermionic parameter group, the named R-matrix families and
              the parametrized Yang-Baxter harness
"""

from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from src.frt_lab.algebra.exact_linalg import (
    embed_pair,
    field_of_matrix,
    flip_matrix,
    identity,
    kron_standard,
    matrix,
    matrix_to_json,
    rank,
)
from src.frt_lab.algebra.scalar_field import (
    ScalarField,
    ScalarSampler,
    field_of,
    format_scalar,
    inv,
    spow,
)
from src.frt_lab.core.errors import BadEntry, DegenerateQ, Singular
from src.frt_lab.core.logging import logger
from src.frt_lab.models.aff_models import CaseLabel
from src.frt_lab.models.report_models import CheckRecord, Verdict
from src.frt_lab.models.rmatrix_models import GammaElement, ParameterLaw, RFamily, RMatrix

YBE_ANCHOR = "solution to the parametrized YBE"
FF_YBE_ANCHOR = "$R(x)$ is a solution"


# ----------------------------------------------------------------------
# The group Γ
# ----------------------------------------------------------------------

def gamma_identity(field: ScalarField) -> GammaElement:
    return GammaElement.identity(field)


def gamma_mul(x: GammaElement, y: GammaElement) -> GammaElement:
    """x∘y"""
    return GammaElement(
        a1=x.a1 * y.a1 - x.b2 * y.b1,
        a2=x.a2 * y.a2 - x.b1 * y.b2,
        b1=x.b1 * y.a1 + x.a2 * y.b1,
        b2=x.a1 * y.b2 + x.b2 * y.a2,
        c1=x.c1 * y.c1,
        c2=x.c2 * y.c2,
    )


def gamma_inv(x: GammaElement) -> GammaElement:
    det = x.a1 * x.a2 + x.b1 * x.b2
    if not det or not x.c1 or not x.c2:
        raise Singular(f"{x} is not invertible")
    scale = inv(det)
    return GammaElement(
        a1=x.a2 * scale,
        a2=x.a1 * scale,
        b1=-x.b1 * scale,
        b2=-x.b2 * scale,
        c1=inv(x.c1),
        c2=inv(x.c2),
    )


def gamma_from_weights(a1, a2, b1, b2, c1, c2) -> GammaElement:
    """Validated group element; NotFreeFermionic / Singular on bad weights"""
    return GammaElement(a1, a2, b1, b2, c1, c2)


def multiplicative_identity(field: ScalarField):
    return field.one


GAMMA_LAW = ParameterLaw(
    name="gamma",
    compose=gamma_mul,
    inverse=gamma_inv,
    identity=gamma_identity,
    encode=lambda g: g.to_json(),
)

MULTIPLICATIVE_LAW = ParameterLaw(
    name="multiplicative",
    compose=lambda x, y: x * y,
    inverse=inv,
    identity=multiplicative_identity,
    encode=format_scalar,
)


def element_with_quotient(x: GammaElement, z: GammaElement) -> GammaElement:
    """y = z∘x, so that the ordered pair (x, y) has ratio y∘x⁻¹ = z"""
    return gamma_mul(z, x)


# ----------------------------------------------------------------------
# Families
# ----------------------------------------------------------------------

def six_vertex(a1, a2, b1, b2, c1, c2, field: ScalarField) -> DomainMatrix:
    """Six-vertex layout in the order (w1⊗w1, w2⊗w1, w1⊗w2, w2⊗w2)"""
    z = field.zero
    return matrix(
        [
            [a1, z, z, z],
            [z, b1, c1, z],
            [z, c2, b2, z],
            [z, z, z, a2],
        ],
        field,
    )


def _check_q(q) -> None:
    if not q:
        raise DegenerateQ("q = 0")
    if not (q - inv(q)):
        raise DegenerateQ("q^2 = 1")


def affine_weights(q, x) -> Tuple:
    _check_q(q)
    qi = inv(q)
    a = q - x * qi
    return (a, a, 1 - x, 1 - x, x * (q - qi), q - qi)


def perk_schultz_weights(q, x) -> Tuple:
    _check_q(q)
    qi = inv(q)
    return (q - x * qi, -qi + x * q, 1 - x, 1 - x, x * (q - qi), q - qi)


def gamma_ice_weights(t, z) -> Tuple:
    one = field_of(z).one
    return (one, z, t, z, (one + t) * z, one)


def r_affine_sl2(q, x) -> RMatrix:
    field = field_of(q)
    x = field.convert(x)
    return RMatrix(RFamily.AFFINE_SL2, (("q", q), ("x", x)), six_vertex(*affine_weights(q, x), field))


def r_free_fermion(g: GammaElement) -> RMatrix:
    return RMatrix(RFamily.FREE_FERMION, (("g", g),), six_vertex(*g.weights, g.field))


def r_perk_schultz(q, x) -> RMatrix:
    field = field_of(q)
    x = field.convert(x)
    return RMatrix(RFamily.PERK_SCHULTZ, (("q", q), ("x", x)), six_vertex(*perk_schultz_weights(q, x), field))


def r_gamma_ice(t, z) -> RMatrix:
    field = field_of(z)
    t = field.convert(t)
    return RMatrix(RFamily.GAMMA_ICE, (("t", t), ("z", z)), six_vertex(*gamma_ice_weights(t, z), field))


def r_flip(field: ScalarField) -> RMatrix:
    return RMatrix(RFamily.FLIP, (), flip_matrix(2, field))


def gamma_from_rmatrix(R: RMatrix) -> GammaElement:
    """Read the six weights off a six-vertex matrix and validate them"""
    rows = R.matrix.to_list()
    allowed = {(0, 0), (1, 1), (1, 2), (2, 1), (2, 2), (3, 3)}
    for i in range(4):
        for j in range(4):
            if (i, j) not in allowed and rows[i][j]:
                raise BadEntry(f"entry ({i}, {j}) breaks the six-vertex layout")
    w = R.six_vertex_weights()
    return gamma_from_weights(w["a1"], w["a2"], w["b1"], w["b2"], w["c1"], w["c2"])


def tau_r(M: DomainMatrix) -> DomainMatrix:
    """τ∘R in the fixed basis order"""
    return flip_matrix(2, field_of_matrix(M)) * M


def rq_rank_profile(q, ratios: Optional[Iterable] = None) -> Dict[str, int]:
    """Ranks of R_q(x) at x = q², q⁻², 1 and any extra ratios"""
    points = [spow(q, 2), spow(q, -2), field_of(q).one]
    if ratios:
        points += list(ratios)
    return {format_scalar(x): rank(r_affine_sl2(q, x).matrix) for x in points}


# ----------------------------------------------------------------------
# Sampling group elements by kernel case
# ----------------------------------------------------------------------

def sample_gamma(sampler: ScalarSampler, case: CaseLabel = CaseLabel.INVERTIBLE) -> GammaElement:
    """Random element with the requested (a1, a2) zero pattern; b2 solves the constraint"""
    field = sampler.field
    while True:
        b1, c1, c2 = sampler.generics(3)
        a1 = field.zero if case in (CaseLabel.BOTH_ZERO, CaseLabel.A1_ZERO) else sampler.generic()
        a2 = field.zero if case in (CaseLabel.BOTH_ZERO, CaseLabel.A2_ZERO) else sampler.generic()
        b2 = (c1 * c2 - a1 * a2) * inv(b1)
        if case is CaseLabel.INVERTIBLE and not b2:
            continue
        try:
            return gamma_from_weights(a1, a2, b1, b2, c1, c2)
        except Singular:
            continue


# ----------------------------------------------------------------------
# Yang-Baxter harness
# ----------------------------------------------------------------------

def ybe_residual(provider: Callable[[Any], DomainMatrix], law: ParameterLaw,
                 alpha, beta) -> DomainMatrix:
    """R12(α)R13(α∘β)R23(β) − R23(β)R13(α∘β)R12(α), conventional slot order"""
    Ra = provider(alpha)
    Rb = provider(beta)
    Rab = provider(law.compose(alpha, beta))
    field = field_of_matrix(Ra)
    I2 = identity(2, field)
    R12 = kron_standard(Ra, I2)
    R23 = kron_standard(I2, Rb)
    R13 = embed_pair(Rab, (1, 3), 3)
    return R12 * R13 * R23 - R23 * R13 * R12


def check_pybe(provider: Callable[[Any], DomainMatrix], law: ParameterLaw,
               samples: Sequence[Tuple[Any, Any]], family: str = "custom",
               anchor: str = YBE_ANCHOR) -> List[CheckRecord]:
    """One record per sample; PASS iff the residual is the zero matrix"""
    records = []
    for k, (alpha, beta) in enumerate(samples):
        residual = ybe_residual(provider, law, alpha, beta)
        ok = residual.is_zero_matrix
        records.append(CheckRecord(
            id=f"ybe.{family}.residual[{k:03d}]",
            anchor=anchor,
            verdict=Verdict.PASS if ok else Verdict.FAIL,
            inputs={"alpha": law.encode(alpha), "beta": law.encode(beta), "law": law.name},
            witness=None if ok else matrix_to_json(residual),
        ))
    failed = sum(1 for r in records if r.verdict is Verdict.FAIL)
    logger.info(f"YBE {family}: {len(records) - failed}/{len(records)} zero residuals")
    return records


def family_provider(family: RFamily, q=None, field: Optional[ScalarField] = None
                    ) -> Tuple[Callable[[Any], DomainMatrix], ParameterLaw]:
    """Parameter → matrix callback and composition law for a family"""
    if family is RFamily.AFFINE_SL2:
        return (lambda x: r_affine_sl2(q, x).matrix), MULTIPLICATIVE_LAW
    if family is RFamily.FREE_FERMION:
        return (lambda g: r_free_fermion(g).matrix), GAMMA_LAW
    if family is RFamily.FLIP:
        return (lambda _: flip_matrix(2, field)), MULTIPLICATIVE_LAW
    # Perk-Schultz and gamma ice are checked through their group embeddings
    return (lambda g: r_free_fermion(g).matrix), GAMMA_LAW


def perturbed_provider(provider: Callable[[Any], DomainMatrix], row: int = 0, col: int = 0
                       ) -> Callable[[Any], DomainMatrix]:
    """Negative control: adds 1 to one entry"""
    def wrapped(param):
        M = provider(param).to_dense()
        rows = M.to_list()
        rows[row][col] = rows[row][col] + M.domain.one
        return DomainMatrix(rows, M.shape, M.domain)
    return wrapped

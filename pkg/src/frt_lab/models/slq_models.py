"""
Evaluation comodule data models
Weight sequences and the comodules W_a(r) built inside tensor powers of standard comodules
"""

from dataclasses import dataclass
from typing import Any, Dict, List, NamedTuple, Tuple

from src.frt_lab.algebra.scalar_field import format_scalar
from src.frt_lab.models.frt_models import ComoduleSpec, ParamSlate


class GWeight(NamedTuple):
    """A sequence over {1, 2} and the exponent p of its weight q^p"""
    seq: Tuple[int, ...]
    exponent: int


@dataclass
class EvaluationComodule:
    """W_a(r): basis u_0..u_r inside W_{x_1}⊗...⊗W_{x_r} with Δ(u_i) = Σ_j α_ij ⊗ u_j"""
    a: Any
    r: int
    q: Any
    slate: ParamSlate
    vectors: List[Tuple[Any, ...]]
    spec: ComoduleSpec

    @property
    def dim(self) -> int:
        return self.r + 1

    def to_json(self) -> Dict[str, Any]:
        return {
            "a": format_scalar(self.a),
            "r": self.r,
            "q": format_scalar(self.q),
            "slate": self.slate.to_json(),
            "vectors": [[format_scalar(x) for x in v] for v in self.vectors],
            "coaction": self.spec.to_json()["coaction"],
        }

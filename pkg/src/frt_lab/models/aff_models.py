"""
Free-fermionic bialgebra data models
Kernel cases of τR(z), classification results and the one-dimensional comodule
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List

from src.frt_lab.core.errors import BadEntry
from src.frt_lab.models.frt_models import NCPolynomial
from src.frt_lab.models.rmatrix_models import GammaElement


class CaseLabel(Enum):
    """Zero pattern of (a1(z), a2(z))"""
    INVERTIBLE = "Invertible"
    BOTH_ZERO = "BothZero"
    A1_ZERO = "A1Zero"
    A2_ZERO = "A2Zero"

    @classmethod
    def of(cls, z: GammaElement) -> "CaseLabel":
        if z.a1 and z.a2:
            return cls.INVERTIBLE
        if not z.a1 and not z.a2:
            return cls.BOTH_ZERO
        return cls.A1_ZERO if not z.a1 else cls.A2_ZERO

    @classmethod
    def from_string(cls, text: str) -> "CaseLabel":
        key = text.replace("_", "").lower()
        for case in cls:
            if case.value.lower() == key:
                return case
        raise BadEntry(f"unknown case label '{text}'")


@dataclass
class ClassificationResult:
    """Lattice of subcomodules of V_x⊗V_y with its case label"""
    case: CaseLabel
    z: GammaElement
    lattice: List[Any]
    kernel: Any
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def proper(self) -> List[Any]:
        return [s for s in self.lattice if 0 < s.dim < s.ambient_dim]

    def to_json(self) -> Dict[str, Any]:
        return {
            "case": self.case.value,
            "z": self.z.to_json(),
            "proper_dims": sorted(s.dim for s in self.proper),
            "proper": [s.to_json() for s in self.proper],
            "kernel": self.kernel.to_json(),
        }


@dataclass
class UxyComodule:
    """span{(0, c1, -b1, 0)} ⊂ V_x⊗V_y and its coaction coefficient"""
    x: GammaElement
    y: GammaElement
    vector: List[Any]
    coefficient: NCPolynomial

    def to_json(self) -> Dict[str, Any]:
        return {
            "x": self.x.to_json(),
            "y": self.y.to_json(),
            "vector": self.vector,
            "coefficient": self.coefficient.to_json(["x", "y"]),
        }

"""
R-matrix and parameter-group data models
Free-fermionic group elements, named R-matrix families and composition laws
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, Tuple

from sympy.polys.matrices import DomainMatrix

from src.frt_lab.algebra.scalar_field import ScalarField, format_scalar, same_field
from src.frt_lab.core.errors import BadEntry, NotFreeFermionic, Singular


class RFamily(Enum):
    """Named parametrized R-matrix families"""
    AFFINE_SL2 = "affine_sl2"
    FREE_FERMION = "free_fermion"
    PERK_SCHULTZ = "perk_schultz"
    GAMMA_ICE = "gamma_ice"
    FLIP = "flip"

    @classmethod
    def from_string(cls, name: str) -> "RFamily":
        """Accepts 'affine_sl2', 'AffineSL2', 'affine-sl2', ..."""
        key = name.replace("-", "").replace("_", "").lower()
        for family in cls:
            if family.value.replace("_", "") == key:
                return family
        raise BadEntry(f"unknown R-matrix family '{name}'")


@dataclass(frozen=True)
class GammaElement:
    """Six free-fermionic weights; validated at construction"""
    a1: Any
    a2: Any
    b1: Any
    b2: Any
    c1: Any
    c2: Any

    def __post_init__(self):
        same_field(*self.weights)
        if self.a1 * self.a2 + self.b1 * self.b2 - self.c1 * self.c2:
            raise NotFreeFermionic(
                f"a1*a2 + b1*b2 != c1*c2 for weights {self.to_json()}"
            )
        # det of the GL(2) block equals c1*c2 once the weights are free-fermionic
        if not (self.c1 * self.c2):
            raise Singular("c1*c2 = 0: the GL(2) block and the c-block are singular")

    @property
    def weights(self) -> Tuple[Any, ...]:
        return (self.a1, self.a2, self.b1, self.b2, self.c1, self.c2)

    @property
    def field(self) -> ScalarField:
        return same_field(*self.weights)

    @classmethod
    def identity(cls, field: ScalarField) -> "GammaElement":
        one, zero = field.one, field.zero
        return cls(one, one, zero, zero, one, one)

    def to_json(self) -> Dict[str, str]:
        names = ("a1", "a2", "b1", "b2", "c1", "c2")
        return {n: format_scalar(w) for n, w in zip(names, self.weights)}

    def __str__(self) -> str:
        return "Γ(" + ", ".join(f"{k}={v}" for k, v in self.to_json().items()) + ")"


@dataclass(frozen=True)
class ParameterLaw:
    """Composition law of a parameter group: compose(α, β) = α∘β"""
    name: str
    compose: Callable[[Any, Any], Any] = field(compare=False)
    inverse: Callable[[Any], Any] = field(compare=False)
    identity: Callable[[ScalarField], Any] = field(compare=False)
    encode: Callable[[Any], Any] = field(compare=False, default=format_scalar)

    def quotient(self, x: Any, y: Any) -> Any:
        """y∘x⁻¹, the ratio used for the ordered pair (x, y)"""
        return self.compose(y, self.inverse(x))


@dataclass(frozen=True)
class RMatrix:
    """A 4x4 member of a named family at exact parameters"""
    family: RFamily
    params: Tuple[Tuple[str, Any], ...]
    matrix: DomainMatrix = field(compare=False)

    @property
    def param_dict(self) -> Dict[str, Any]:
        return dict(self.params)

    def six_vertex_weights(self) -> Dict[str, Any]:
        """Read (a1, a2, b1, b2, c1, c2) off the six-vertex layout"""
        rows = self.matrix.to_list()
        return {
            "a1": rows[0][0], "b1": rows[1][1], "c1": rows[1][2],
            "c2": rows[2][1], "b2": rows[2][2], "a2": rows[3][3],
        }

    def to_json(self) -> Dict[str, Any]:
        encoded = {}
        for key, value in self.params:
            encoded[key] = value.to_json() if isinstance(value, GammaElement) else format_scalar(value)
        return {
            "family": self.family.value,
            "params": encoded,
            "matrix": [[format_scalar(x) for x in row] for row in self.matrix.to_list()],
        }

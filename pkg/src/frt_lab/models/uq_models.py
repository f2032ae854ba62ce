"""
U_q(affine sl2) data models
Generator letters, words, tensor elements and evaluation representations
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from sympy.polys.matrices import DomainMatrix

from src.frt_lab.algebra.scalar_field import ScalarField, format_scalar
from src.frt_lab.core.errors import BadEntry, DimensionMismatch, FieldMismatch


class ULetter(Enum):
    """Generators K_i^{±1}, e_i, f_i for i = 0, 1"""
    K0 = "K0"
    K0_INV = "K0^-1"
    K1 = "K1"
    K1_INV = "K1^-1"
    E0 = "e0"
    E1 = "e1"
    F0 = "f0"
    F1 = "f1"

    @property
    def node(self) -> int:
        return 0 if self in (ULetter.K0, ULetter.K0_INV, ULetter.E0, ULetter.F0) else 1

    @property
    def kind(self) -> str:
        return {
            ULetter.K0: "K", ULetter.K1: "K",
            ULetter.K0_INV: "Kinv", ULetter.K1_INV: "Kinv",
            ULetter.E0: "e", ULetter.E1: "e",
            ULetter.F0: "f", ULetter.F1: "f",
        }[self]

    @classmethod
    def cartan(cls, node: int) -> Tuple["ULetter", "ULetter"]:
        return (cls.K0, cls.K0_INV) if node == 0 else (cls.K1, cls.K1_INV)

    @classmethod
    def raising(cls, node: int) -> "ULetter":
        return cls.E0 if node == 0 else cls.E1

    @classmethod
    def lowering(cls, node: int) -> "ULetter":
        return cls.F0 if node == 0 else cls.F1

    @classmethod
    def parse(cls, text: str) -> "ULetter":
        for letter in cls:
            if letter.value == text:
                return letter
        raise BadEntry(f"unknown generator letter '{text}'")


UWord = Tuple[ULetter, ...]

LETTER_ORDER = {letter: k for k, letter in enumerate(ULetter)}


def uword_key(word: UWord) -> Tuple[int, ...]:
    return tuple(LETTER_ORDER[l] for l in word)


def parse_uword(text: str) -> UWord:
    """'e0*f1*K1' -> (E0, F1, K1); '' or '1' is the empty word"""
    text = text.strip()
    if text in ("", "1"):
        return ()
    return tuple(ULetter.parse(part.strip()) for part in text.split("*"))


def format_uword(word: UWord) -> str:
    return "*".join(l.value for l in word) or "1"


class UElement:
    """Linear combination of tensors of words; legs = 1 for plain U_q elements"""

    __slots__ = ("field", "legs", "terms")

    def __init__(self, field: ScalarField, legs: int = 1,
                 terms: Optional[Dict[Tuple[UWord, ...], Any]] = None):
        self.field = field
        self.legs = legs
        self.terms: Dict[Tuple[UWord, ...], Any] = {}
        for key, coeff in (terms or {}).items():
            if len(key) != legs:
                raise DimensionMismatch(f"tensor key with {len(key)} legs in a {legs}-leg element")
            if coeff:
                self.terms[tuple(tuple(w) for w in key)] = coeff

    @classmethod
    def word(cls, field: ScalarField, word: UWord, coeff: Any = None) -> "UElement":
        return cls(field, 1, {(tuple(word),): field.one if coeff is None else coeff})

    @classmethod
    def unit(cls, field: ScalarField, legs: int = 1) -> "UElement":
        return cls(field, legs, {((),) * legs: field.one})

    def _check(self, other: "UElement"):
        if other.field != self.field:
            raise FieldMismatch("U elements over different fields")
        if other.legs != self.legs:
            raise DimensionMismatch("U elements with different numbers of legs")

    def __add__(self, other: "UElement") -> "UElement":
        self._check(other)
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms.get(key, self.field.zero) + coeff
        return UElement(self.field, self.legs, terms)

    def __neg__(self) -> "UElement":
        return self.scale(-self.field.one)

    def __sub__(self, other: "UElement") -> "UElement":
        return self + (-other)

    def __mul__(self, other: "UElement") -> "UElement":
        """Leg-wise concatenation"""
        self._check(other)
        terms: Dict[Tuple[UWord, ...], Any] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(k1, k2))
                terms[key] = terms.get(key, self.field.zero) + c1 * c2
        return UElement(self.field, self.legs, terms)

    def scale(self, coeff: Any) -> "UElement":
        return UElement(self.field, self.legs, {k: c * coeff for k, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> List[Tuple[Tuple[UWord, ...], Any]]:
        return sorted(self.terms.items(), key=lambda kv: tuple(uword_key(w) for w in kv[0]))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UElement):
            return NotImplemented
        return self.field == other.field and self.legs == other.legs and (self - other).is_zero()

    __hash__ = None

    def to_json(self) -> List[Dict[str, Any]]:
        return [
            {"coefficient": format_scalar(c), "tensor": [format_uword(w) for w in key]}
            for key, c in self.items()
        ]

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"({format_scalar(c)})" + "⊗".join(format_uword(w) for w in key)
            for key, c in self.items()
        )


@dataclass
class EvalRep:
    """Matrices of the eight generators on V_a(r); columns are images of v_j"""
    a: Any
    r: int
    q: Any
    matrices: Dict[ULetter, DomainMatrix] = field(default_factory=dict)
    label: str = "eval"

    def __post_init__(self):
        for letter, m in self.matrices.items():
            if m.shape != (self.dim, self.dim):
                raise DimensionMismatch(f"{letter.value} has shape {m.shape}, expected {self.dim}x{self.dim}")

    @property
    def dim(self) -> int:
        return self.r + 1

    def __getitem__(self, letter: ULetter) -> DomainMatrix:
        return self.matrices[letter]

    def word_matrix(self, word: UWord) -> DomainMatrix:
        """ρ(l_1 l_2 ... l_n) = ρ(l_1)ρ(l_2)...ρ(l_n)"""
        result = DomainMatrix.eye(self.dim, self.matrices[ULetter.K1].domain)
        for letter in word:
            result = result * self.matrices[letter]
        return result

    def to_json(self):
        return {
            "a": format_scalar(self.a),
            "r": self.r,
            "q": format_scalar(self.q),
            "label": self.label,
        }

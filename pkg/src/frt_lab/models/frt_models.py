"""
Parametrized FRT data models
Generator symbols, noncommutative polynomials, parameter slates, relation sets,
comodule specifications and coaction matrices
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, NamedTuple, Optional, Tuple

from sympy.polys.matrices import DomainMatrix

from src.frt_lab.algebra.scalar_field import ScalarField, format_scalar
from src.frt_lab.core.errors import BadEntry, CompositionError, DimensionMismatch, FieldMismatch
from src.frt_lab.models.rmatrix_models import ParameterLaw


class GenSymbol(NamedTuple):
    """t_ij at the slate point with the given index"""
    i: int
    j: int
    point: int

    def label(self, names: Optional[List[str]] = None) -> str:
        name = names[self.point] if names else f"x{self.point}"
        return f"t{self.i}{self.j}({name})"


Word = Tuple[GenSymbol, ...]


def word_key(word: Word) -> Tuple[Tuple[int, int, int], ...]:
    """Deterministic order on words: by (point, i, j) slot by slot"""
    return tuple((g.point, g.i, g.j) for g in word)


def check_symbol(symbol: GenSymbol, slate_size: int):
    if symbol.i not in (1, 2) or symbol.j not in (1, 2):
        raise BadEntry(f"generator indices out of range: {symbol}")
    if not 0 <= symbol.point < slate_size:
        raise BadEntry(f"point index {symbol.point} outside a slate of size {slate_size}")


class NCPolynomial:
    """Finite linear combination of generator words; zero coefficients never stored"""

    __slots__ = ("field", "terms")

    def __init__(self, field: ScalarField, terms: Optional[Dict[Word, Any]] = None):
        self.field = field
        self.terms: Dict[Word, Any] = {}
        for word, coeff in (terms or {}).items():
            if coeff:
                self.terms[tuple(word)] = field.convert(coeff)

    @classmethod
    def zero(cls, field: ScalarField) -> "NCPolynomial":
        return cls(field)

    @classmethod
    def one(cls, field: ScalarField) -> "NCPolynomial":
        return cls(field, {(): field.one})

    @classmethod
    def monomial(cls, field: ScalarField, word: Iterable[GenSymbol], coeff: Any = None) -> "NCPolynomial":
        return cls(field, {tuple(word): field.one if coeff is None else coeff})

    @classmethod
    def generator(cls, field: ScalarField, i: int, j: int, point: int) -> "NCPolynomial":
        return cls.monomial(field, (GenSymbol(i, j, point),))

    def _check(self, other: "NCPolynomial"):
        if other.field != self.field:
            raise FieldMismatch("polynomials over different fields")

    def __add__(self, other: "NCPolynomial") -> "NCPolynomial":
        self._check(other)
        terms = dict(self.terms)
        for word, coeff in other.terms.items():
            terms[word] = terms.get(word, self.field.zero) + coeff
        return NCPolynomial(self.field, terms)

    def __neg__(self) -> "NCPolynomial":
        return NCPolynomial(self.field, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "NCPolynomial") -> "NCPolynomial":
        return self + (-other)

    def __mul__(self, other: "NCPolynomial") -> "NCPolynomial":
        self._check(other)
        terms: Dict[Word, Any] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                word = w1 + w2
                terms[word] = terms.get(word, self.field.zero) + c1 * c2
        return NCPolynomial(self.field, terms)

    def scale(self, coeff: Any) -> "NCPolynomial":
        return NCPolynomial(self.field, {w: c * coeff for w, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        return self.field == other.field and (self - other).is_zero()

    def __hash__(self):
        return hash(tuple(sorted((word_key(w), c) for w, c in self.terms.items())))

    def degrees(self) -> FrozenSet[int]:
        return frozenset(len(w) for w in self.terms)

    def items(self) -> List[Tuple[Word, Any]]:
        return sorted(self.terms.items(), key=lambda item: word_key(item[0]))

    def coefficient(self, word: Iterable[GenSymbol]) -> Any:
        return self.terms.get(tuple(word), self.field.zero)

    def strike(self, struck: FrozenSet[Tuple[int, int]]) -> "NCPolynomial":
        """Drop every word containing a struck generator"""
        if not struck:
            return self
        return NCPolynomial(
            self.field,
            {w: c for w, c in self.terms.items() if not any((g.i, g.j) in struck for g in w)},
        )

    def reindexed(self, mapping: Dict[int, int]) -> "NCPolynomial":
        """Move every generator to the point index mapping[point]"""
        return NCPolynomial(
            self.field,
            {tuple(GenSymbol(g.i, g.j, mapping[g.point]) for g in w): c for w, c in self.terms.items()},
        )

    def counit(self) -> Any:
        """ε(t_ij) = δ_ij extended multiplicatively"""
        total = self.field.zero
        for word, coeff in self.terms.items():
            if all(g.i == g.j for g in word):
                total = total + coeff
        return total

    def to_json(self, names: Optional[List[str]] = None) -> List[Dict[str, Any]]:
        return [
            {"coefficient": format_scalar(c), "word": [g.label(names) for g in w]}
            for w, c in self.items()
        ]

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for word, coeff in self.items():
            body = "·".join(g.label() for g in word) or "1"
            parts.append(f"({format_scalar(coeff)}){body}")
        return " + ".join(parts)


@dataclass(frozen=True)
class ParamSlate:
    """Ordered finite list of parameter points sharing one composition law"""
    points: Tuple[Any, ...]
    law: ParameterLaw
    field: ScalarField

    def __post_init__(self):
        if not self.points:
            raise CompositionError("a parameter slate needs at least one point")
        for k, p in enumerate(self.points):
            if any(p == other for other in self.points[:k]):
                raise CompositionError(f"slate point {k} repeats an earlier point")

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, index: int) -> Any:
        return self.points[index]

    def quotient(self, p: int, p2: int) -> Any:
        """Ratio of the ordered pair (points[p], points[p2])"""
        try:
            return self.law.quotient(self.points[p], self.points[p2])
        except (ArithmeticError, TypeError) as e:
            raise CompositionError(f"cannot compose points {p} and {p2}: {e}") from e

    def index_of(self, point: Any) -> int:
        for k, p in enumerate(self.points):
            if p == point:
                return k
        raise CompositionError(f"point {self.law.encode(point)} is not on the slate")

    def extended(self, *points: Any) -> "ParamSlate":
        return ParamSlate(tuple(self.points) + tuple(points), self.law, self.field)

    def merged(self, other: "ParamSlate") -> "ParamSlate":
        """Union keeping self's order, then the new points of other"""
        if other.law.name != self.law.name:
            raise CompositionError("slates use different composition laws")
        fresh = [p for p in other.points if not any(p == q for q in self.points)]
        return self.extended(*fresh)

    def names(self) -> List[str]:
        return [f"x{k}" for k in range(len(self.points))]

    def to_json(self) -> List[Any]:
        return [self.law.encode(p) for p in self.points]


class StrikeMode(Enum):
    """Quotients obtained by striking off-diagonal generators"""
    NONE = "A"
    B_PLUS = "B+"
    B_MINUS = "B-"
    DIAGONAL = "T"

    @property
    def struck(self) -> FrozenSet[Tuple[int, int]]:
        return {
            StrikeMode.NONE: frozenset(),
            StrikeMode.B_PLUS: frozenset({(2, 1)}),
            StrikeMode.B_MINUS: frozenset({(1, 2)}),
            StrikeMode.DIAGONAL: frozenset({(1, 2), (2, 1)}),
        }[self]


@dataclass(frozen=True)
class Relation:
    """One instantiated quadratic relation for the ordered point pair"""
    pair: Tuple[int, int]
    indices: Tuple[int, int, int, int]
    poly: NCPolynomial

    def to_json(self, names: Optional[List[str]] = None) -> Dict[str, Any]:
        return {
            "pair": list(self.pair),
            "indices": list(self.indices),
            "terms": self.poly.to_json(names),
        }


@dataclass
class RelationSet:
    """Degree-2 relations spanning the ideal over a slate"""
    family: Any
    slate: ParamSlate
    relations: List[Relation] = field(default_factory=list)

    def __iter__(self) -> Iterator[Relation]:
        return iter(self.relations)

    def __len__(self) -> int:
        return len(self.relations)

    def nonzero(self) -> List[Relation]:
        return [r for r in self.relations if not r.poly.is_zero()]

    def to_json(self) -> List[Dict[str, Any]]:
        names = self.slate.names()
        return [r.to_json(names) for r in self.relations]


@dataclass
class ComoduleSpec:
    """Basis labels with Δ(v_i) = Σ_j coefficients[i][j] ⊗ v_j"""
    labels: List[str]
    coefficients: List[List[NCPolynomial]]
    slate: ParamSlate

    def __post_init__(self):
        d = len(self.labels)
        if len(self.coefficients) != d or any(len(row) != d for row in self.coefficients):
            raise DimensionMismatch(f"coefficient table is not {d}x{d}")

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def degrees(self) -> FrozenSet[int]:
        found = set()
        for row in self.coefficients:
            for poly in row:
                found |= poly.degrees()
        return frozenset(found)

    @classmethod
    def standard(cls, slate: ParamSlate, point: int) -> "ComoduleSpec":
        """V_x with Δ(v_i) = Σ_j t_ij(x) ⊗ v_j"""
        f = slate.field
        coefficients = [[NCPolynomial.generator(f, i, j, point) for j in (1, 2)] for i in (1, 2)]
        return cls([f"v1@{point}", f"v2@{point}"], coefficients, slate)

    @classmethod
    def trivial(cls, slate: ParamSlate) -> "ComoduleSpec":
        return cls(["1"], [[NCPolynomial.one(slate.field)]], slate)

    def tensor(self, other: "ComoduleSpec") -> "ComoduleSpec":
        """Little-endian: index i + dim(self)·k for v_i ⊗ w_k"""
        if other.slate != self.slate:
            raise CompositionError("tensor factors live on different slates")
        d1, d2 = self.dim, other.dim
        labels = [f"{self.labels[i]}⊗{other.labels[k]}" for k in range(d2) for i in range(d1)]
        coefficients = [[None] * (d1 * d2) for _ in range(d1 * d2)]
        for k in range(d2):
            for i in range(d1):
                for l in range(d2):
                    for j in range(d1):
                        coefficients[i + d1 * k][j + d1 * l] = (
                            self.coefficients[i][j] * other.coefficients[k][l]
                        )
        return ComoduleSpec(labels, coefficients, self.slate)

    def moved_to(self, slate: "ParamSlate") -> "ComoduleSpec":
        """Same comodule with point indices rewritten into a larger slate"""
        mapping = {p: slate.index_of(point) for p, point in enumerate(self.slate.points)}
        coefficients = [[poly.reindexed(mapping) for poly in row] for row in self.coefficients]
        return ComoduleSpec(list(self.labels), coefficients, slate)

    def to_json(self) -> Dict[str, Any]:
        names = self.slate.names()
        return {
            "labels": list(self.labels),
            "coaction": [[p.to_json(names) for p in row] for row in self.coefficients],
        }


@dataclass
class CoactionMatrixSet:
    """M^(k)[i, j]: coefficient of basis_k ⊗ v_j in Δ(v_i), over a graded component"""
    dim: int
    matrices: List[DomainMatrix]
    component: Any

    def __post_init__(self):
        for m in self.matrices:
            if m.shape != (self.dim, self.dim):
                raise DimensionMismatch(f"coaction matrix of shape {m.shape}, expected {self.dim}x{self.dim}")

    def __len__(self) -> int:
        return len(self.matrices)

"""
@file_name: exact_linalg.py
@author: frtlab
@date: 2025-07-04
@description: Exact linear algebra over QQ / QQ(i) on top of sympy DomainMatrix:
              RREF, kernels, canonical subspaces, tensor products, slot embeddings,
              invariant-subspace search and the matrix-algebra span certificate
"""

from dataclasses import dataclass
from itertools import combinations, product
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from src.frt_lab.algebra.scalar_field import (
    RATIONAL,
    Scalar,
    ScalarField,
    format_scalar,
    get_field,
    inv,
)
from src.frt_lab.core.errors import (
    DimensionMismatch,
    FieldMismatch,
    NotDiagonal,
    SlotIndexError,
)
from src.frt_lab.core.logging import logger
from src.frt_lab.models.report_models import Irreducibility

Vector = Tuple[Scalar, ...]


# ----------------------------------------------------------------------
# Construction helpers
# ----------------------------------------------------------------------

def field_of_matrix(M: DomainMatrix) -> ScalarField:
    return RATIONAL if M.domain.is_QQ else get_field("gaussian")


def check_same_field(*mats: DomainMatrix) -> ScalarField:
    domains = {m.domain for m in mats}
    if len(domains) > 1:
        raise FieldMismatch(f"matrices over different fields: {sorted(str(d) for d in domains)}")
    return field_of_matrix(mats[0]) if mats else RATIONAL


def matrix(rows: Sequence[Sequence[Any]], field: ScalarField = RATIONAL,
           shape: Optional[Tuple[int, int]] = None) -> DomainMatrix:
    """Dense matrix from nested rows; entries converted into the field"""
    data = [[field.convert(x) for x in row] for row in rows]
    if shape is None:
        shape = (len(data), len(data[0]) if data else 0)
    if any(len(row) != shape[1] for row in data) or len(data) != shape[0]:
        raise DimensionMismatch(f"ragged rows for shape {shape}")
    if shape[0] == 0 or shape[1] == 0:
        return DomainMatrix.zeros(shape, field.domain)
    return DomainMatrix(data, shape, field.domain)


def sparse_matrix(dod: Dict[int, Dict[int, Scalar]], shape: Tuple[int, int],
                  field: ScalarField) -> DomainMatrix:
    cleaned = {i: {j: v for j, v in row.items() if v} for i, row in dod.items()}
    return DomainMatrix.from_dod({i: r for i, r in cleaned.items() if r}, shape, field.domain)


def identity(n: int, field: ScalarField = RATIONAL) -> DomainMatrix:
    return DomainMatrix.eye(n, field.domain)


def zeros(m: int, n: int, field: ScalarField = RATIONAL) -> DomainMatrix:
    return DomainMatrix.zeros((m, n), field.domain)


def entry(M: DomainMatrix, i: int, j: int) -> Scalar:
    return M.rep.getitem(i, j)


def rows_of(M: DomainMatrix) -> List[List[Scalar]]:
    return M.to_list()


def column(v: Sequence[Scalar], field: ScalarField) -> DomainMatrix:
    return matrix([[x] for x in v], field, (len(v), 1))


def row_matrix(vectors: Sequence[Sequence[Scalar]], n: int, field: ScalarField) -> DomainMatrix:
    return matrix([list(v) for v in vectors], field, (len(vectors), n))


def matrices_equal(A: DomainMatrix, B: DomainMatrix) -> bool:
    """Format-independent exact equality"""
    if A.shape != B.shape:
        return False
    check_same_field(A, B)
    return (A - B).is_zero_matrix


def _apply_rows(rows: List[List[Scalar]], v: Sequence[Scalar], zero: Scalar) -> Vector:
    out = []
    for row in rows:
        acc = zero
        for a, b in zip(row, v):
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return tuple(out)


def mat_vec(M: DomainMatrix, v: Sequence[Scalar]) -> Vector:
    """M·v for a column vector given as a sequence"""
    return _apply_rows(M.to_list(), v, M.domain.zero)


def vec_mat(v: Sequence[Scalar], M: DomainMatrix) -> Vector:
    """v·M for a row vector"""
    return mat_vec(M.transpose(), v)


# ----------------------------------------------------------------------
# RREF, kernel, solve
# ----------------------------------------------------------------------

def rref(M: DomainMatrix) -> Tuple[DomainMatrix, int, List[int]]:
    """Exact reduced row-echelon form, rank and pivot columns"""
    m, n = M.shape
    if m == 0 or n == 0:
        return M, 0, []
    R, pivots = M.rref()
    return R, len(pivots), list(pivots)


def rank(M: DomainMatrix) -> int:
    return rref(M)[1]


def kernel(M: DomainMatrix) -> "Subspace":
    """Right null space {v : M·v = 0} in canonical RREF form"""
    field = field_of_matrix(M)
    m, n = M.shape
    R, r, pivots = rref(M)
    rows = R.to_list() if m else []
    free = [c for c in range(n) if c not in set(pivots)]
    vectors = []
    for f in free:
        v = [field.zero] * n
        v[f] = field.one
        for row_index, p in enumerate(pivots):
            v[p] = -rows[row_index][f]
        vectors.append(v)
    return Subspace.from_vectors(vectors, n, field)


def left_kernel(M: DomainMatrix) -> "Subspace":
    """{c : c·M = 0}"""
    return kernel(M.transpose())


def solve(A: DomainMatrix, b: Sequence[Scalar]) -> Optional[Vector]:
    """One exact solution of A·x = b, or None when inconsistent"""
    field = check_same_field(A)
    m, n = A.shape
    aug = A.to_dense().hstack(column(b, field))
    R, r, pivots = rref(aug)
    if n in pivots:
        return None
    rows = R.to_list()
    x = [field.zero] * n
    for row_index, p in enumerate(pivots):
        x[p] = rows[row_index][n]
    return tuple(x)


# ----------------------------------------------------------------------
# Subspaces
# ----------------------------------------------------------------------

class _EchelonBasis:
    """Incremental echelon basis; reduce() keeps rows fully reduced"""

    def __init__(self, n: int, field: ScalarField):
        self.n = n
        self.field = field
        self.rows: Dict[int, List[Scalar]] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence[Scalar]) -> List[Scalar]:
        w = list(v)
        for p in sorted(self.rows):
            if w[p]:
                c = w[p]
                row = self.rows[p]
                w = [a - c * b if b else a for a, b in zip(w, row)]
        return w

    def add(self, v: Sequence[Scalar]) -> Optional[List[Scalar]]:
        """Insert v; returns the new normalized row or None if dependent"""
        w = self.reduce(v)
        pivot = next((k for k, x in enumerate(w) if x), None)
        if pivot is None:
            return None
        scale = inv(w[pivot])
        w = [x * scale for x in w]
        for p, row in self.rows.items():
            if row[pivot]:
                c = row[pivot]
                self.rows[p] = [a - c * b for a, b in zip(row, w)]
        self.rows[pivot] = w
        return w

    def contains(self, v: Sequence[Scalar]) -> bool:
        return not any(self.reduce(v))

    def subspace(self) -> "Subspace":
        return Subspace(self.n, tuple(tuple(self.rows[p]) for p in sorted(self.rows)), self.field)


@dataclass(frozen=True)
class Subspace:
    """Subspace of field^n stored by its RREF row basis (canonical)"""
    ambient_dim: int
    basis: Tuple[Vector, ...]
    field: ScalarField = RATIONAL

    @classmethod
    def from_vectors(cls, vectors: Iterable[Sequence[Scalar]], ambient_dim: int,
                     field: ScalarField = RATIONAL) -> "Subspace":
        vectors = [list(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatch(f"vector of length {len(v)} in a space of dimension {ambient_dim}")
        if not vectors or ambient_dim == 0:
            return cls(ambient_dim, (), field)
        R, r, _ = rref(row_matrix(vectors, ambient_dim, field))
        rows = R.to_list()[:r]
        return cls(ambient_dim, tuple(tuple(row) for row in rows), field)

    @classmethod
    def zero(cls, n: int, field: ScalarField = RATIONAL) -> "Subspace":
        return cls(n, (), field)

    @classmethod
    def full(cls, n: int, field: ScalarField = RATIONAL) -> "Subspace":
        return cls.from_vectors(rows_of(identity(n, field)) if n else [], n, field)

    @classmethod
    def coordinate(cls, indices: Iterable[int], n: int, field: ScalarField = RATIONAL) -> "Subspace":
        vectors = []
        for i in sorted(set(indices)):
            v = [field.zero] * n
            v[i] = field.one
            vectors.append(v)
        return cls(n, tuple(tuple(v) for v in vectors), field)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def is_trivial(self) -> bool:
        return self.dim in (0, self.ambient_dim)

    def matrix(self) -> DomainMatrix:
        return row_matrix(self.basis, self.ambient_dim, self.field)

    def contains(self, v: Sequence[Scalar]) -> bool:
        echelon = _EchelonBasis(self.ambient_dim, self.field)
        for row in self.basis:
            echelon.add(row)
        return echelon.contains(v)

    def is_subspace_of(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.basis)

    def annihilator(self) -> List[Vector]:
        """Row vectors w with w·u = 0 for every u in the subspace"""
        if self.dim == 0:
            return list(Subspace.full(self.ambient_dim, self.field).basis)
        return list(kernel(self.matrix()).basis)

    def sort_key(self) -> Tuple:
        return (self.dim, tuple(tuple(format_scalar(x) for x in row) for row in self.basis))

    def to_json(self) -> Dict[str, Any]:
        return {
            "ambient_dim": self.ambient_dim,
            "dim": self.dim,
            "basis": [[format_scalar(x) for x in row] for row in self.basis],
        }


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch("subspaces of different ambient spaces")
    return Subspace.from_vectors(list(a.basis) + list(b.basis), a.ambient_dim, a.field)


def subspace_intersection(a: Subspace, b: Subspace) -> Subspace:
    """Kernel of the stacked annihilators"""
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch("subspaces of different ambient spaces")
    n = a.ambient_dim
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(n, a.field)
    constraints = [list(w) for w in a.annihilator() if a.dim < n]
    constraints += [list(w) for w in b.annihilator() if b.dim < n]
    if not constraints:
        return Subspace.full(n, a.field)
    return kernel(row_matrix(constraints, n, a.field))


def subspace_contains(a: Subspace, v: Sequence[Scalar]) -> bool:
    return a.contains(v)


def is_invariant(space: Subspace, ops: Sequence[DomainMatrix]) -> bool:
    """op·u ∈ space for every basis vector u and op (column convention)"""
    echelon = _EchelonBasis(space.ambient_dim, space.field)
    for row in space.basis:
        echelon.add(row)
    for op in ops:
        rows = op.to_list()
        if not all(echelon.contains(_apply_rows(rows, u, space.field.zero)) for u in space.basis):
            return False
    return True


# ----------------------------------------------------------------------
# Tensor products and embeddings
# ----------------------------------------------------------------------

def kron_standard(A: DomainMatrix, B: DomainMatrix) -> DomainMatrix:
    """Conventional Kronecker product: the first factor is the most significant slot"""
    field = check_same_field(A, B)
    (ma, na), (mb, nb) = A.shape, B.shape
    a_dod, b_dod = A.to_dod(), B.to_dod()
    dod: Dict[int, Dict[int, Scalar]] = {}
    for i1, row_a in a_dod.items():
        for i2, row_b in b_dod.items():
            out = dod.setdefault(i1 * mb + i2, {})
            for j1, x in row_a.items():
                for j2, y in row_b.items():
                    out[j1 * nb + j2] = x * y
    return sparse_matrix(dod, (ma * mb, na * nb), field).to_dense()


def kron(A: DomainMatrix, B: DomainMatrix) -> DomainMatrix:
    """A⊗B in the little-endian order (w1⊗w1, w2⊗w1, w1⊗w2, w2⊗w2)"""
    return kron_standard(B, A)


def kron_all(mats: Sequence[DomainMatrix], little_endian: bool = True) -> DomainMatrix:
    result = mats[0]
    for m in mats[1:]:
        result = kron(result, m) if little_endian else kron_standard(result, m)
    return result


def flip_matrix(d: int = 2, field: ScalarField = RATIONAL) -> DomainMatrix:
    """τ(e_i⊗e_j) = e_j⊗e_i; the same permutation in both slot orders"""
    dod = {j * d + i: {i * d + j: field.one} for i in range(d) for j in range(d)}
    return sparse_matrix(dod, (d * d, d * d), field).to_dense()


def _slot_dim(M: DomainMatrix) -> int:
    m, n = M.shape
    d = int(round(m ** 0.5))
    if m != n or d * d != m:
        raise DimensionMismatch(f"{M.shape} is not an operator on V⊗V")
    return d


def embed_pair(M: DomainMatrix, positions: Tuple[int, int], n: int) -> DomainMatrix:
    """M on tensor slots (i, j) of V^{⊗n}, identity elsewhere (conventional slot order)"""
    i, j = positions
    if not (1 <= i < j <= n):
        raise SlotIndexError(f"slots {positions} invalid for n = {n}")
    d = _slot_dim(M)
    field = field_of_matrix(M)
    by_column: Dict[int, List[Tuple[int, Scalar]]] = {}
    for r, row in M.to_dod().items():
        for c, value in row.items():
            by_column.setdefault(c, []).append((r, value))
    size = d ** n
    weights = [d ** (n - 1 - s) for s in range(n)]
    dod: Dict[int, Dict[int, Scalar]] = {}
    for multi in product(range(d), repeat=n):
        col = sum(a * w for a, w in zip(multi, weights))
        src = multi[i - 1] * d + multi[j - 1]
        base = col - multi[i - 1] * weights[i - 1] - multi[j - 1] * weights[j - 1]
        for dst, value in by_column.get(src, ()):
            a, b = divmod(dst, d)
            row = base + a * weights[i - 1] + b * weights[j - 1]
            dod.setdefault(row, {})[col] = value
    return sparse_matrix(dod, (size, size), field).to_dense()



# ----------------------------------------------------------------------
# Invariant subspaces and algebra span
# ----------------------------------------------------------------------

def _check_ops(ops: Sequence[DomainMatrix], n: int):
    for op in ops:
        if op.shape != (n, n):
            raise DimensionMismatch(f"operator of shape {op.shape} on a space of dimension {n}")


def _close(seeds: Sequence[Sequence[Scalar]], ops: Sequence[DomainMatrix], n: int,
           field: ScalarField) -> Subspace:
    _check_ops(ops, n)
    op_rows = [op.to_list() for op in ops]
    echelon = _EchelonBasis(n, field)
    queue = [list(s) for s in seeds]
    while queue and len(echelon) < n:
        w = queue.pop()
        if echelon.add(w) is None:
            continue
        for rows in op_rows:
            queue.append(list(_apply_rows(rows, w, field.zero)))
    return echelon.subspace()


def invariant_closure(v: Sequence[Scalar], ops: Sequence[DomainMatrix],
                      field: Optional[ScalarField] = None) -> Subspace:
    """Smallest subspace containing v and closed under every op (column convention)"""
    if field is None:
        field = field_of_matrix(ops[0]) if ops else RATIONAL
    return _close([v], ops, len(v), field)


def closure_of_space(space: Subspace, ops: Sequence[DomainMatrix]) -> Subspace:
    return _close(space.basis, ops, space.ambient_dim, space.field)


def algebra_span_dim(ops: Sequence[DomainMatrix]) -> int:
    """Dimension of the unital algebra generated by ops"""
    if not ops:
        return 1
    d = ops[0].shape[0]
    _check_ops(ops, d)
    field = check_same_field(*ops)
    echelon = _EchelonBasis(d * d, field)

    def flat(M: DomainMatrix) -> List[Scalar]:
        return [x for row in M.to_list() for x in row]

    queue = [identity(d, field).to_dense()]
    while queue and len(echelon) < d * d:
        A = queue.pop()
        if echelon.add(flat(A)) is None:
            continue
        for op in ops:
            queue.append(A * op)
    logger.debug(f"algebra span of {len(ops)} operators on dim {d}: {len(echelon)}")
    return len(echelon)


def weight_clusters(diag_ops: Sequence[DomainMatrix], n: int) -> List[List[int]]:
    """Standard basis indices grouped by joint diagonal weight"""
    _check_ops(diag_ops, n)
    groups: Dict[Tuple, List[int]] = {}
    dods = [op.to_dod() for op in diag_ops]
    for dod in dods:
        for i, row in dod.items():
            if any(j != i for j in row):
                raise NotDiagonal("operator has an off-diagonal nonzero entry")
    for i in range(n):
        weight = tuple(format_scalar(dod.get(i, {}).get(i, diag_ops[0].domain.zero)) for dod in dods)
        groups.setdefault(weight, []).append(i)
    return sorted(groups.values())


def weight_invariant_subspaces(diag_ops: Sequence[DomainMatrix],
                               ops: Sequence[DomainMatrix],
                               n: Optional[int] = None) -> List[Subspace]:
    """Coordinate subspaces over unions of weight clusters invariant under every op"""
    if n is None:
        n = (diag_ops[0] if diag_ops else ops[0]).shape[0]
    _check_ops(ops, n)
    field = field_of_matrix((list(diag_ops) + list(ops))[0]) if (diag_ops or ops) else RATIONAL
    clusters = weight_clusters(diag_ops, n) if diag_ops else [[i] for i in range(n)]
    op_dods = [op.to_dod() for op in ops]
    found = []
    for size in range(len(clusters) + 1):
        for chosen in combinations(range(len(clusters)), size):
            indices = {i for c in chosen for i in clusters[c]}
            closed = all(
                r in indices
                for dod in op_dods
                for r, row in dod.items()
                for col in row
                if col in indices
            )
            if closed:
                found.append(Subspace.coordinate(indices, n, field))
    return found


def largest_invariant_subspace(ops: Sequence[DomainMatrix], container: Subspace) -> Subspace:
    """Largest L ⊆ container with op·L ⊆ L for every op"""
    current = container
    while current.dim:
        n = current.ambient_dim
        _check_ops(ops, n)
        if current.dim == n:
            return current
        B = current.matrix()
        N = row_matrix(current.annihilator(), n, current.field)
        blocks = [N * op * B.transpose() for op in ops]
        if not blocks:
            return current
        stacked = blocks[0].to_dense().vstack(*blocks[1:]) if len(blocks) > 1 else blocks[0]
        coeffs = kernel(stacked)
        if coeffs.dim == current.dim:
            return current
        vectors = [vec_mat(c, B) for c in coeffs.basis]
        current = Subspace.from_vectors(vectors, n, current.field)
    return current


def irreducibility(ops: Sequence[DomainMatrix], probes: Optional[Sequence[Sequence[Scalar]]] = None
                   ) -> Tuple[Irreducibility, Optional[Subspace], int]:
    """Two-certificate verdict: full algebra span, or an explicit proper invariant subspace

    Probes are closed under ops and under the transposed ops; a proper closure of the
    latter yields its annihilator as the witness.
    """
    n = ops[0].shape[0]
    field = check_same_field(*ops)
    if probes is None:
        probes = rows_of(identity(n, field))
    span = algebra_span_dim(ops)
    transposed = [op.transpose() for op in ops]
    witness = None
    for v in probes:
        closure = invariant_closure(v, ops, field)
        if not closure.is_trivial:
            witness = closure
            break
        dual = invariant_closure(v, transposed, field)
        if not dual.is_trivial:
            witness = kernel(dual.matrix())
            break
    if witness is None and span == n * n:
        return Irreducibility.IRREDUCIBLE, None, span
    if witness is not None and span < n * n:
        return Irreducibility.REDUCIBLE, witness, span
    logger.warning(f"irreducibility inconclusive on dim {n}: span {span}, witness {witness is not None}")
    return Irreducibility.INCONCLUSIVE, witness, span


# ----------------------------------------------------------------------
# Serialization
# ----------------------------------------------------------------------

def matrix_to_json(M: DomainMatrix) -> List[List[str]]:
    return [[format_scalar(x) for x in row] for row in M.to_list()]


def vector_to_json(v: Sequence[Scalar]) -> List[str]:
    return [format_scalar(x) for x in v]

"""
Exact linear algebra: kernels, subspace lattice operations, tensor orders and irreducibility certificates
"""

import pytest

from src.frt_lab.algebra.exact_linalg import (
    Subspace,
    algebra_span_dim,
    embed_pair,
    flip_matrix,
    identity,
    irreducibility,
    is_invariant,
    kernel,
    kron,
    kron_standard,
    largest_invariant_subspace,
    matrices_equal,
    matrix,
    rank,
    solve,
    subspace_intersection,
    subspace_sum,
)
from src.frt_lab.algebra.scalar_field import RATIONAL
from src.frt_lab.core.errors import DimensionMismatch, FieldMismatch, SlotIndexError
from src.frt_lab.models.report_models import Irreducibility

pytestmark = pytest.mark.unit


def test_rank_and_kernel():
    M = matrix([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert rank(M) == 2
    ker = kernel(M)
    assert ker.dim == 1
    v = ker.basis[0]
    assert all(sum(M.to_list()[i][j] * v[j] for j in range(3)) == 0 for i in range(3))


def test_solve_consistent_and_inconsistent():
    A = matrix([[1, 1], [1, -1]])
    x = solve(A, [RATIONAL.from_ints(3), RATIONAL.from_ints(1)])
    assert tuple(x) == (2, 1)
    B = matrix([[1, 1], [2, 2]])
    assert solve(B, [RATIONAL.one, RATIONAL.zero]) is None


def test_subspace_sum_and_intersection():
    n = 4
    a = Subspace.coordinate([0, 1], n)
    b = Subspace.coordinate([1, 2], n)
    assert subspace_sum(a, b).dim == 3
    meet = subspace_intersection(a, b)
    assert meet == Subspace.coordinate([1], n)
    assert meet.is_subspace_of(a) and meet.is_subspace_of(b)


def test_subspace_canonical_basis():
    one = Subspace.from_vectors([[1, 1, 0], [0, 1, 1]], 3)
    two = Subspace.from_vectors([[1, 2, 1], [2, 2, 0]], 3)
    assert one == two
    with pytest.raises(DimensionMismatch):
        Subspace.from_vectors([[1, 2]], 3)


def test_kron_orders_are_swapped():
    A = matrix([[1, 2], [3, 4]])
    B = matrix([[0, 1], [5, 7]])
    assert matrices_equal(kron(A, B), kron_standard(B, A))
    assert not matrices_equal(kron(A, B), kron_standard(A, B))


def test_flip_is_an_involution():
    P = flip_matrix(2)
    assert matrices_equal(P * P, identity(4))
    A = matrix([[1, 2], [3, 4]])
    B = matrix([[0, 1], [5, 7]])
    assert matrices_equal(P * kron_standard(A, B) * P, kron_standard(B, A))


def test_embed_pair_adjacent_slots_match_kron():
    R = matrix([[1, 0, 0, 0], [0, 2, 3, 0], [0, 5, 7, 0], [0, 0, 0, 11]])
    I2 = identity(2)
    assert matrices_equal(embed_pair(R, (1, 2), 3), kron_standard(R, I2))
    assert matrices_equal(embed_pair(R, (2, 3), 3), kron_standard(I2, R))
    with pytest.raises(SlotIndexError):
        embed_pair(R, (2, 2), 3)


def test_invariance_and_largest_invariant_subspace():
    upper = matrix([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    line = Subspace.coordinate([0], 3)
    plane = Subspace.coordinate([0, 1], 3)
    assert is_invariant(line, [upper])
    assert is_invariant(plane, [upper])
    assert not is_invariant(Subspace.coordinate([2], 3), [upper])
    found = largest_invariant_subspace([upper], Subspace.coordinate([0, 2], 3))
    assert found == line


def test_irreducibility_certificates():
    e = matrix([[0, 1], [0, 0]])
    f = matrix([[0, 0], [1, 0]])
    verdict, witness, span = irreducibility([e, f])
    assert verdict is Irreducibility.IRREDUCIBLE and witness is None and span == 4

    verdict, witness, span = irreducibility([e])
    assert verdict is Irreducibility.REDUCIBLE
    assert witness.dim == 1 and span < 4
    assert is_invariant(witness, [e])


def test_algebra_span_of_diagonal_operators():
    assert algebra_span_dim([matrix([[1, 0], [0, 2]])]) == 2


def test_field_mismatch_detected():
    from src.frt_lab.algebra.scalar_field import GAUSSIAN
    with pytest.raises(FieldMismatch):
        matrices_equal(identity(2, RATIONAL), identity(2, GAUSSIAN))

"""
Hasse diagrams and composition-factor dimensions of subspace lattices
"""

import pytest

from src.frt_lab.algebra.exact_linalg import Subspace
from src.frt_lab.tools.lattice_graph import factor_dimensions, hasse_diagram, lattice_to_json, maximal_chain

pytestmark = pytest.mark.unit


@pytest.fixture
def lattice():
    return [
        Subspace.zero(3),
        Subspace.coordinate([0], 3),
        Subspace.coordinate([1], 3),
        Subspace.coordinate([0, 1], 3),
        Subspace.full(3),
    ]


def test_covering_relations(lattice):
    graph = hasse_diagram(lattice)
    assert set(graph.edges) == {(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)}
    assert graph.nodes[3]["dim"] == 2


def test_maximal_chain_and_factors(lattice):
    chain = maximal_chain(lattice)
    assert [s.dim for s in chain] == [0, 1, 2, 3]
    assert factor_dimensions(lattice) == [1, 1, 1]


def test_two_element_lattice():
    assert factor_dimensions([Subspace.zero(4), Subspace.full(4)]) == [4]
    assert maximal_chain([]) == []


def test_json_export(lattice):
    data = lattice_to_json(lattice)
    assert len(data["nodes"]) == 5

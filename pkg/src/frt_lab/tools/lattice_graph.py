"""
Subcomodule lattice graph utilities
Hasse diagrams, maximal chains and JSON export of the lattices found by subcomodule search
"""

from typing import Any, Dict, List, Sequence

import networkx as nx

from src.frt_lab.algebra.exact_linalg import Subspace


def hasse_diagram(lattice: Sequence[Subspace]) -> nx.DiGraph:
    """
    Directed graph of covering relations

    Args:
        lattice: subspaces of one ambient space, zero and full space included

    Returns:
        DiGraph with an edge A -> B whenever A ⊊ B and nothing in the lattice lies strictly between
    """
    graph = nx.DiGraph()
    spaces = list(lattice)
    for k, space in enumerate(spaces):
        graph.add_node(k, dim=space.dim, basis=space.to_json()["basis"])
    below = {
        (a, b)
        for a, A in enumerate(spaces)
        for b, B in enumerate(spaces)
        if a != b and A.dim < B.dim and A.is_subspace_of(B)
    }
    for a, b in below:
        between = any((a, c) in below and (c, b) in below for c in range(len(spaces)))
        if not between:
            graph.add_edge(a, b)
    return graph


def maximal_chain(lattice: Sequence[Subspace]) -> List[Subspace]:
    """Longest chain from the bottom to the top of the Hasse diagram"""
    if not lattice:
        return []
    graph = hasse_diagram(lattice)
    path = nx.dag_longest_path(graph)
    return [lattice[k] for k in path]


def factor_dimensions(lattice: Sequence[Subspace]) -> List[int]:
    """Dimensions of successive quotients along a maximal chain"""
    chain = maximal_chain(lattice)
    return [b.dim - a.dim for a, b in zip(chain, chain[1:])]


def lattice_to_json(lattice: Sequence[Subspace]) -> Dict[str, Any]:
    return nx.node_link_data(hasse_diagram(lattice))

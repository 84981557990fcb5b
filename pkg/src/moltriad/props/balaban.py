"""Balaban distance-connectivity index J."""
from __future__ import annotations

import networkx as nx

from ..chem.mol import Molecule


def balaban_j(mol: Molecule) -> float:
    """J = q/(mu+1) * sum over edges of (s_i * s_j)^(-1/2), on the
    heavy-atom graph with bond-order-weighted distances.

    Single-atom and disconnected inputs return 0 by convention.
    """
    heavy = [i for i, atom in enumerate(mol.atoms) if atom.element != 1]
    n = len(heavy)
    if n < 2:
        return 0.0

    graph = nx.Graph()
    graph.add_nodes_from(heavy)
    for bond in mol.bonds:
        if mol.atoms[bond.a].element == 1 or mol.atoms[bond.b].element == 1:
            continue
        graph.add_edge(bond.a, bond.b, weight=1.0 / bond.order_value)
    if not nx.is_connected(graph):
        return 0.0

    distance = dict(nx.all_pairs_dijkstra_path_length(graph, weight="weight"))
    row_sum = {i: sum(distance[i].values()) for i in heavy}

    q = graph.number_of_edges()
    mu = q - n + 1
    total = sum(
        (row_sum[a] * row_sum[b]) ** -0.5 for a, b in graph.edges()
    )
    return q / (mu + 1.0) * total

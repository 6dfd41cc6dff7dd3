"""Bipartite matching helpers backed by networkx"""

from typing import Callable

import networkx as nx
from networkx.algorithms import bipartite


def has_left_perfect_matching(
    left_count: int, right_count: int, compatible: Callable[[int, int], bool]
) -> bool:
    """
    Decide whether every left vertex can be matched to a distinct right vertex

    Args:
        left_count: Number of left vertices
        right_count: Number of right vertices
        compatible: Edge predicate on (left index, right index)

    Returns:
        True when a matching saturating the left side exists
    """
    if left_count == 0:
        return True
    if left_count > right_count:
        return False

    graph = nx.Graph()
    left_nodes = [("l", i) for i in range(left_count)]
    graph.add_nodes_from(left_nodes, bipartite=0)
    graph.add_nodes_from((("r", j) for j in range(right_count)), bipartite=1)
    for i in range(left_count):
        edges = [(("l", i), ("r", j)) for j in range(right_count) if compatible(i, j)]
        if not edges:
            return False
        graph.add_edges_from(edges)

    matching = bipartite.hopcroft_karp_matching(graph, top_nodes=left_nodes)
    matched_left = sum(1 for node in matching if node[0] == "l")
    return matched_left == left_count

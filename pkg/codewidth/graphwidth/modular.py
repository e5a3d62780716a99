"""
Neighborhood types and modular contraction.

u and v share a neighborhood type iff N(u) minus v equals N(v) minus u.
Non-adjacent twins have equal open neighborhoods, adjacent twins equal
closed neighborhoods, and no vertex has both kinds of twin, so the classes
are the union of the two groupings.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Hashable, Tuple

import networkx as nx

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NeighborhoodPartition:
    """Neighborhood-type classes, each sorted, ordered by smallest member."""

    classes: Tuple[Tuple[Hashable, ...], ...]

    @property
    def diversity(self) -> int:
        return len(self.classes)

    def class_of(self) -> Dict[Hashable, int]:
        return {v: position for position, members in enumerate(self.classes) for v in members}


def neighborhood_partition(graph: nx.Graph) -> NeighborhoodPartition:
    """The partition of V into neighborhood-type classes."""
    parent = {v: v for v in graph.nodes}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for closed in (False, True):
        first_with = {}
        for v in graph.nodes:
            key = frozenset(graph.neighbors(v))
            if closed:
                key = key | {v}
            if key in first_with:
                parent[find(v)] = find(first_with[key])
            else:
                first_with[key] = v

    groups = {}
    for v in graph.nodes:
        groups.setdefault(find(v), []).append(v)
    classes = sorted((tuple(sorted(members)) for members in groups.values()), key=lambda c: c[0])
    return NeighborhoodPartition(tuple(classes))


def neighborhood_diversity(graph: nx.Graph) -> int:
    return neighborhood_partition(graph).diversity


def modular_contraction(graph: nx.Graph) -> nx.Graph:
    """
    Keeps the lowest vertex of every class with its induced adjacency.

    Each kept vertex gets a `members` attribute listing its class.
    """
    partition = neighborhood_partition(graph)
    contracted = graph.subgraph(members[0] for members in partition.classes).copy()
    for members in partition.classes:
        contracted.nodes[members[0]]["members"] = members
    logger.debug(f"Contracted {graph.number_of_nodes()} vertices to {contracted.number_of_nodes()}")
    return contracted


def is_isomorphic(first: nx.Graph, second: nx.Graph) -> bool:
    """Structural isomorphism, ignoring vertex attributes."""
    return nx.is_isomorphic(first, second)

"""
Exact pathwidth of small graphs as the vertex separation number.

For a vertex ordering, the separation after a prefix S is the number of
vertices in S with a neighbor outside S. Pathwidth equals the minimum over
orderings of the maximum separation.
"""

import logging

import networkx as nx

from config import Config
from codewidth.core.exceptions import TooLarge

logger = logging.getLogger(__name__)


def exact_pathwidth(graph: nx.Graph, cap: int = None) -> int:
    """
    Exact pathwidth; 0 for graphs without edges.

    Raises:
        TooLarge: If the graph has more vertices than the cap.
    """
    cap = Config.PATHWIDTH_VERTEX_CAP if cap is None else cap
    vertices = sorted(graph.nodes)
    size = len(vertices)
    if size > cap:
        raise TooLarge(f"Exact pathwidth needs at most {cap} vertices, graph has {size}",
                       limit=cap, requested=size)
    position = {v: p for p, v in enumerate(vertices)}
    adjacency = [0] * size
    for u, v in graph.edges:
        adjacency[position[u]] |= 1 << position[v]
        adjacency[position[v]] |= 1 << position[u]
    full = (1 << size) - 1

    def separation(prefix: int) -> int:
        outside = full & ~prefix
        return sum(1 for p in range(size) if (prefix >> p) & 1 and adjacency[p] & outside)

    for width in range(size):
        if _has_ordering(size, full, width, separation):
            logger.debug(f"Pathwidth of a {size}-vertex graph is {width}")
            return width
    return 0


def _has_ordering(size, full, width, separation) -> bool:
    """Depth-first search over prefixes whose separation stays within width."""
    seen = {0}
    stack = [0]
    while stack:
        prefix = stack.pop()
        if prefix == full:
            return True
        for p in range(size):
            extended = prefix | (1 << p)
            if extended == prefix or extended in seen:
                continue
            seen.add(extended)
            if separation(extended) <= width:
                stack.append(extended)
    return False

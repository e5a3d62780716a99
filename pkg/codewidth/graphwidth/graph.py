"""
Incidence graphs of CNF formulas and the graph exchange format.

Vertex ids: DIMACS variable idx is vertex idx - 1, clause c (0-based) is
vertex num_vars + c. Every vertex carries a `kind` ("var" or "clause") and
a `label` ("x 1", "z 2 3", "C 4").
"""

import logging

import networkx as nx

from codewidth.cnfgen import CnfFormula
from codewidth.core.exceptions import ParseError

logger = logging.getLogger(__name__)


def variable_vertex(idx: int) -> int:
    return idx - 1


def clause_vertex(formula: CnfFormula, position: int) -> int:
    return formula.num_vars + position


def incidence_graph(formula: CnfFormula) -> nx.Graph:
    """Bipartite graph with an edge between every clause and the variables it contains."""
    graph = nx.Graph()
    for idx, var in enumerate(formula.variables, start=1):
        graph.add_node(variable_vertex(idx), kind="var", label=str(var))
    for position, clause in enumerate(formula.clauses):
        vertex = clause_vertex(formula, position)
        graph.add_node(vertex, kind="clause", label=f"C {position + 1}")
        graph.add_edges_from((vertex, variable_vertex(abs(lit))) for lit in clause)
    logger.debug(f"Incidence graph with {graph.number_of_nodes()} vertices "
                 f"and {graph.number_of_edges()} edges")
    return graph


def write_graph(graph: nx.Graph) -> str:
    """
    Adjacency-list text:

        v <id> <kind> <label>
        a <id> <neighbor ids ...>
    """
    lines = []
    for vertex in sorted(graph.nodes):
        data = graph.nodes[vertex]
        lines.append(f"v {vertex} {data.get('kind', 'vertex')} {data.get('label', vertex)}")
    for vertex in sorted(graph.nodes):
        neighbors = " ".join(str(u) for u in sorted(graph.neighbors(vertex)))
        lines.append(f"a {vertex} {neighbors}".rstrip())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> nx.Graph:
    """
    Inverse of write_graph.

    Raises:
        ParseError: On malformed lines, unknown ids, self-loops or asymmetric adjacency.
    """
    graph = nx.Graph()
    adjacency = {}
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "v" and len(parts) >= 4:
                graph.add_node(int(parts[1]), kind=parts[2], label=" ".join(parts[3:]))
            elif parts[0] == "a":
                adjacency[int(parts[1])] = ({int(u) for u in parts[2:]}, line_number)
            else:
                raise ParseError(f"unexpected line {line!r}", line_number=line_number)
        except (ValueError, IndexError):
            raise ParseError(f"malformed line {line!r}", line_number=line_number)

    for vertex, (neighbors, line_number) in adjacency.items():
        if vertex not in graph or not neighbors <= set(graph.nodes):
            raise ParseError("adjacency mentions an undeclared vertex", line_number=line_number)
        if vertex in neighbors:
            raise ParseError(f"self-loop at vertex {vertex}", line_number=line_number)
        for u in neighbors:
            if vertex not in adjacency.get(u, (set(), 0))[0]:
                raise ParseError(f"edge {vertex}-{u} listed on one side only", line_number=line_number)
            graph.add_edge(vertex, u)
    return graph

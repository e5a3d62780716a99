"""
Path decompositions: validation, the explicit bag sequence for the blocked
encoding, and the one-bag-per-line text format.
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, Hashable, Mapping, Optional, Tuple

import networkx as nx

from codewidth.cnfgen import CnfFormula, X, Z
from codewidth.core.exceptions import ParseError, ValidationError
from .graph import clause_vertex, incidence_graph, variable_vertex
from .modular import neighborhood_partition

logger = logging.getLogger(__name__)

EMPTY_BAG = "-"


@dataclass(frozen=True)
class PathDecomposition:
    """Ordered bags of graph vertices."""

    bags: Tuple[FrozenSet[Hashable], ...]

    @classmethod
    def of(cls, *bags) -> "PathDecomposition":
        return cls(tuple(frozenset(bag) for bag in bags))

    @property
    def width(self) -> int:
        return max((len(bag) for bag in self.bags), default=0) - 1

    def __len__(self):
        return len(self.bags)


@dataclass(frozen=True)
class DecompositionReport:
    """Outcome of validate_path_decomposition; `violation` names the first failed axiom."""

    valid: bool
    width: int
    violation: Optional[str] = None
    witness: Tuple = ()

    def describe(self) -> str:
        if self.valid:
            return f"valid, width {self.width}"
        return f"invalid: {self.violation} {self.witness}"


def validate_path_decomposition(graph: nx.Graph, decomposition: PathDecomposition) -> DecompositionReport:
    """Checks vertex coverage, contiguity and edge coverage, in that order."""
    width = decomposition.width
    runs = {}
    for position, bag in enumerate(decomposition.bags):
        for v in bag:
            if v not in graph:
                return DecompositionReport(False, width, "unknown vertex", (v,))
            runs.setdefault(v, []).append(position)

    for v in graph.nodes:
        if v not in runs:
            return DecompositionReport(False, width, "uncovered vertex", (v,))
    for v, positions in runs.items():
        if positions[-1] - positions[0] + 1 != len(positions):
            return DecompositionReport(False, width, "non-contiguous vertex", (v, tuple(positions)))
    for u, v in graph.edges:
        first = max(runs[u][0], runs[v][0])
        last = min(runs[u][-1], runs[v][-1])
        if first > last:
            return DecompositionReport(False, width, "uncovered edge", (u, v))
    return DecompositionReport(True, width)


def _s(ell: int, j: int) -> str:
    return f"s {ell} {j}"


def _r(ell: int, j: int) -> str:
    return f"r {ell} {j}"


def build_claim_decomposition(k: int, n: int) -> PathDecomposition:
    """
    The bag sequence over the contracted blocked-encoding graph.

    Labels: `x j` for code bits, `s l j` for the class of accumulators
    z_{i,j} of row block l, `r l j` for the clauses of constraint R_j of row
    block l (l = 1..k). The bags are

        {x_1, r_*1}, {s_*1, r_*1},
        then for j = 2..n: {s_*,j-1, r_*j}, {x_j, r_*j}, {s_*j, r_*j}

    which is 3n - 1 bags of width 2k - 1.
    """
    if k < 1 or n < 2:
        raise ValidationError(f"Blocked path decomposition needs k >= 1 and n >= 2, got k={k}, n={n}",
                              field="k")
    blocks = range(1, k + 1)

    def r_all(j):
        return {_r(ell, j) for ell in blocks}

    def s_all(j):
        return {_s(ell, j) for ell in blocks}

    bags = [{"x 1"} | r_all(1), s_all(1) | r_all(1)]
    for j in range(2, n + 1):
        bags.append(s_all(j - 1) | r_all(j))
        bags.append({f"x {j}"} | r_all(j))
        bags.append(s_all(j) | r_all(j))
    return PathDecomposition.of(*bags)


def claim_graph(k: int, n: int) -> nx.Graph:
    """
    The contracted blocked-encoding graph over the labels of
    build_claim_decomposition: x_j ~ r_{l,j}, s_{l,j} ~ r_{l,j}, r_{l,j+1}.
    """
    graph = nx.Graph()
    for j in range(1, n + 1):
        graph.add_node(f"x {j}", kind="var", label=f"x {j}")
        for ell in range(1, k + 1):
            graph.add_node(_s(ell, j), kind="var", label=_s(ell, j))
            graph.add_node(_r(ell, j), kind="clause", label=_r(ell, j))
            graph.add_edge(f"x {j}", _r(ell, j))
            graph.add_edge(_s(ell, j), _r(ell, j))
            if j < n:
                graph.add_edge(_s(ell, j), _r(ell, j + 1))
    return graph


def claim_decomposition_for(formula: CnfFormula, k: int = None, b: int = None) -> PathDecomposition:
    """
    The claim bags resolved onto modular_contraction(incidence_graph(formula)).

    x_j maps to its variable vertex, s_{l,j} to z_{(l-1)b+1, j}, and r_{l,j}
    to the first clause over exactly the scope of R_j of row block l; each
    then maps to its class representative. Vertices no bag reaches get a
    leading bag of their own.

    Raises:
        ValidationError: If the formula is not a blocked encoding for (k, b).
    """
    if k is None or b is None:
        if formula.provenance is None:
            raise ValidationError("Formula carries no generator parameters; pass k and b", field="k")
        k, b = formula.provenance.k, formula.provenance.b
    n = len(formula.variables.x_variables())
    table = formula.variables

    graph = incidence_graph(formula)
    partition = neighborhood_partition(graph)
    representative = {v: members[0] for members in partition.classes for v in members}

    first_clause = {}
    for position, clause in enumerate(formula.clauses):
        first_clause.setdefault(frozenset(abs(lit) for lit in clause), position)

    def var_vertex(var):
        if var not in table:
            raise ValidationError(f"Formula has no variable {var}; not a blocked encoding "
                                  f"for k={k}, b={b}", field="formula")
        return representative[variable_vertex(table.index(var))]

    def clause_class(ell, j):
        rows = range((ell - 1) * b + 1, ell * b + 1)
        scope = [X(j)] + [Z(i, j - 1) for i in rows if j > 1] + [Z(i, j) for i in rows]
        key = frozenset(table.index(var) for var in scope if var in table)
        if len(key) != len(scope) or key not in first_clause:
            raise ValidationError(f"No clause over the scope of R_{j} in row block {ell}",
                                  field="formula")
        return representative[clause_vertex(formula, first_clause[key])]

    resolve = {}
    for j in range(1, n + 1):
        resolve[f"x {j}"] = var_vertex(X(j))
        for ell in range(1, k + 1):
            resolve[_s(ell, j)] = var_vertex(Z((ell - 1) * b + 1, j))
            resolve[_r(ell, j)] = clause_class(ell, j)

    bags = [frozenset(resolve[label] for label in bag) for bag in build_claim_decomposition(k, n).bags]
    covered = set().union(*bags)
    contracted = set(representative.values())
    leading = [frozenset({v}) for v in sorted(contracted - covered)]
    return PathDecomposition(tuple(leading + bags))


def write_decomposition(decomposition: PathDecomposition,
                        labels: Mapping[Hashable, str] = None) -> str:
    """One bag per line, vertex labels sorted and joined by ', '."""
    lines = []
    for bag in decomposition.bags:
        names = sorted(str(labels[v]) if labels is not None else str(v) for v in bag)
        lines.append(", ".join(names) if names else EMPTY_BAG)
    return "\n".join(lines) + "\n"


def parse_decomposition(text: str) -> PathDecomposition:
    """Bags of label strings; resolve them with labels_to_vertices."""
    bags = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line == EMPTY_BAG:
            bags.append(frozenset())
            continue
        names = [part.strip() for part in line.split(",")]
        if any(not name for name in names):
            raise ParseError(f"empty vertex label in bag {line!r}", line_number=line_number)
        bags.append(frozenset(names))
    return PathDecomposition(tuple(bags))


def labels_to_vertices(graph: nx.Graph, decomposition: PathDecomposition) -> PathDecomposition:
    """Maps label bags onto vertex ids through the graph's `label` attribute."""
    by_label = {}
    for v, data in graph.nodes(data=True):
        by_label[data.get("label", str(v))] = v
    unknown = [name for bag in decomposition.bags for name in bag if name not in by_label]
    if unknown:
        raise ValidationError(f"Unknown vertex label {unknown[0]!r}", field="decomposition")
    return PathDecomposition(tuple(frozenset(by_label[name] for name in bag)
                                   for bag in decomposition.bags))


def vertex_labels(graph: nx.Graph) -> dict:
    return {v: data.get("label", str(v)) for v, data in graph.nodes(data=True)}

"""
NNF circuits and the c2d-style text format.

    nnf <#nodes> <#edges> <#vars>
    L <+-var>
    A <#children> <ids ...>
    O <decision var or 0> <#children> <ids ...>

Nodes are listed children first; the last node is the sink (root).
`A 0` is the constant true and `O 0 0` the constant false.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Sequence, Tuple

from codewidth.core.exceptions import CyclicCircuit, MultipleSinks, ParseError

logger = logging.getLogger(__name__)

LITERAL, AND, OR = "L", "A", "O"


@dataclass(frozen=True)
class NnfNode:
    kind: str
    children: Tuple[int, ...] = ()
    literal: int = 0
    decision: int = 0

    @property
    def is_true(self) -> bool:
        return self.kind == AND and not self.children

    @property
    def is_false(self) -> bool:
        return self.kind == OR and not self.children


def _check_structure(nodes: Sequence[NnfNode]):
    if not nodes:
        raise ParseError("circuit has no nodes")
    has_parent = [False] * len(nodes)
    for index, node in enumerate(nodes):
        if node.kind == LITERAL:
            if node.literal == 0 or node.children:
                raise ParseError(f"node {index}: literal node needs a nonzero literal")
            continue
        if node.kind not in (AND, OR):
            raise ParseError(f"node {index}: unknown node kind {node.kind!r}")
        for child in node.children:
            if child == index:
                raise CyclicCircuit(index)
            if not 0 <= child < index:
                raise ParseError(f"node {index} references node {child}, which is not listed before it")
            has_parent[child] = True
    parentless = [index for index in range(len(nodes) - 1) if not has_parent[index]]
    if parentless:
        raise MultipleSinks(parentless + [len(nodes) - 1])


@dataclass(frozen=True)
class NnfCircuit:
    """A rooted DAG of literal, AND and OR nodes; node ids are list positions."""

    nodes: Tuple[NnfNode, ...]
    num_vars: int = 0

    def __post_init__(self):
        _check_structure(self.nodes)
        declared = max((abs(node.literal) for node in self.nodes), default=0)
        if self.num_vars < declared:
            object.__setattr__(self, "num_vars", declared)

    @property
    def root(self) -> int:
        return len(self.nodes) - 1

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return sum(len(node.children) for node in self.nodes)

    @cached_property
    def var_masks(self) -> Tuple[int, ...]:
        """Per node, the variables below it as a bitmask (bit v-1 for variable v)."""
        masks = []
        for node in self.nodes:
            if node.kind == LITERAL:
                masks.append(1 << (abs(node.literal) - 1))
            else:
                mask = 0
                for child in node.children:
                    mask |= masks[child]
                masks.append(mask)
        return tuple(masks)

    def variables(self, node: int = None) -> Tuple[int, ...]:
        """var(node), ascending; the root by default."""
        mask = self.var_masks[self.root if node is None else node]
        return tuple(v + 1 for v in range(mask.bit_length()) if (mask >> v) & 1)


class CircuitBuilder:
    """
    Hash-consed bottom-up construction. Nodes are created children first, so
    creation order is topological; build() keeps the part reachable from the
    chosen root.
    """

    def __init__(self):
        self.nodes: List[NnfNode] = []
        self._ids: Dict[NnfNode, int] = {}

    def __len__(self):
        return len(self.nodes)

    def add(self, node: NnfNode) -> int:
        existing = self._ids.get(node)
        if existing is not None:
            return existing
        self.nodes.append(node)
        self._ids[node] = len(self.nodes) - 1
        return len(self.nodes) - 1

    def literal(self, lit: int) -> int:
        return self.add(NnfNode(LITERAL, literal=lit))

    def true(self) -> int:
        return self.add(NnfNode(AND))

    def false(self) -> int:
        return self.add(NnfNode(OR))

    def is_false(self, node: int) -> bool:
        return self.nodes[node].is_false

    def conjoin(self, children: Sequence[int]) -> int:
        """AND, dropping true children; false if any child is false."""
        kept = []
        for child in children:
            if self.nodes[child].is_false:
                return self.false()
            if not self.nodes[child].is_true and child not in kept:
                kept.append(child)
        if not kept:
            return self.true()
        if len(kept) == 1:
            return kept[0]
        return self.add(NnfNode(AND, tuple(kept)))

    def disjoin(self, children: Sequence[int], decision: int = 0) -> int:
        """OR, dropping false children."""
        kept = [child for child in children if not self.nodes[child].is_false]
        if not kept:
            return self.false()
        if len(kept) == 1:
            return kept[0]
        return self.add(NnfNode(OR, tuple(kept), decision=decision))

    def build(self, root: int, num_vars: int = 0) -> NnfCircuit:
        reachable = set()
        stack = [root]
        while stack:
            node = stack.pop()
            if node in reachable:
                continue
            reachable.add(node)
            stack.extend(self.nodes[node].children)
        order = sorted(reachable)
        renumber = {old: new for new, old in enumerate(order)}
        nodes = []
        for old in order:
            node = self.nodes[old]
            nodes.append(NnfNode(node.kind, tuple(renumber[c] for c in node.children),
                                 node.literal, node.decision))
        return NnfCircuit(tuple(nodes), num_vars)


def write_nnf(circuit: NnfCircuit) -> str:
    lines = [f"nnf {circuit.node_count} {circuit.edge_count} {circuit.num_vars}"]
    for node in circuit.nodes:
        ids = " ".join(str(c) for c in node.children)
        if node.kind == LITERAL:
            lines.append(f"L {node.literal}")
        elif node.kind == AND:
            lines.append(f"A {len(node.children)} {ids}".rstrip())
        else:
            lines.append(f"O {node.decision} {len(node.children)} {ids}".rstrip())
    return "\n".join(lines) + "\n"


def parse_nnf(text: str) -> NnfCircuit:
    """
    Raises:
        ParseError: On malformed lines, count mismatches or forward references.
        CyclicCircuit: If a node lists itself as a child.
        MultipleSinks: If a node other than the last has no parent.
    """
    header = None
    nodes = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c "):
            continue
        parts = line.split()
        try:
            values = [int(tok) for tok in parts[1:]]
        except ValueError:
            raise ParseError(f"non-integer field in {line!r}", line_number=line_number)
        if parts[0] == "nnf":
            if header is not None or len(values) != 3:
                raise ParseError("expected a single 'nnf <nodes> <edges> <vars>' header",
                                 line_number=line_number)
            header = values
            continue
        if header is None:
            raise ParseError("node before the nnf header", line_number=line_number)
        index = len(nodes)
        if parts[0] == LITERAL and len(values) == 1:
            node = NnfNode(LITERAL, literal=values[0])
        elif parts[0] == AND and values and len(values) == values[0] + 1:
            node = NnfNode(AND, tuple(values[1:]))
        elif parts[0] == OR and len(values) >= 2 and len(values) == values[1] + 2:
            node = NnfNode(OR, tuple(values[2:]), decision=values[0])
        else:
            raise ParseError(f"malformed node line {line!r}", line_number=line_number)
        for child in node.children:
            if child == index:
                raise CyclicCircuit(index)
            if not 0 <= child < index:
                raise ParseError(f"node {index} references node {child}, which is not listed before it",
                                 line_number=line_number)
        nodes.append(node)

    if header is None:
        raise ParseError("missing nnf header")
    circuit = NnfCircuit(tuple(nodes), header[2])
    if circuit.node_count != header[0] or circuit.edge_count != header[1]:
        raise ParseError(
            f"header announces {header[0]} nodes and {header[1]} edges, "
            f"found {circuit.node_count} and {circuit.edge_count}")
    if circuit.num_vars != header[2]:
        raise ParseError(f"literal of variable {circuit.num_vars} exceeds the {header[2]} declared variables")
    logger.debug(f"Parsed NNF with {circuit.node_count} nodes and {circuit.edge_count} edges")
    return circuit

"""
Decomposability, determinism, evaluation and truth tables of NNF circuits.
"""

import logging
from typing import Dict, List, Mapping, Sequence

from config import Config
from codewidth.common.truthtable import TruthTable, full_mask, position_mask
from codewidth.core.exceptions import IncompleteAssignment, TooLarge, ValidationError
from .circuit import AND, LITERAL, OR, NnfCircuit

logger = logging.getLogger(__name__)


def check_decomposable(circuit: NnfCircuit) -> List[int]:
    """AND nodes with two children sharing a variable; empty means decomposable."""
    masks = circuit.var_masks
    violations = []
    for index, node in enumerate(circuit.nodes):
        if node.kind != AND:
            continue
        seen = 0
        for child in node.children:
            if seen & masks[child]:
                violations.append(index)
                break
            seen |= masks[child]
    return violations


def node_tables(circuit: NnfCircuit, variables: Sequence[int] = None, cap: int = None) -> List[int]:
    """
    Truth table bits of every node over `variables` (default var(root)).

    Raises:
        TooLarge: If there are more variables than the truth-table cap.
    """
    cap = Config.TRUTH_TABLE_VAR_CAP if cap is None else cap
    variables = tuple(circuit.variables() if variables is None else variables)
    if len(variables) > cap:
        raise TooLarge(f"Truth tables over {len(variables)} variables exceed the cap of {cap}",
                       limit=cap, requested=len(variables))
    position = {v: p for p, v in enumerate(variables)}
    everything = full_mask(len(variables))
    tables = []
    for node in circuit.nodes:
        if node.kind == LITERAL:
            var = abs(node.literal)
            if var not in position:
                raise ValidationError(f"Variable {var} missing from the truth-table variables",
                                      field="variables")
            mask = position_mask(len(variables), position[var])
            tables.append(mask if node.literal > 0 else everything & ~mask)
        elif node.kind == AND:
            bits = everything
            for child in node.children:
                bits &= tables[child]
            tables.append(bits)
        else:
            bits = 0
            for child in node.children:
                bits |= tables[child]
            tables.append(bits)
    return tables


def circuit_truth_table(circuit: NnfCircuit, variables: Sequence[int] = None,
                        cap: int = None) -> TruthTable:
    """The function computed at the sink, over DIMACS variable ids."""
    variables = tuple(circuit.variables() if variables is None else variables)
    return TruthTable(variables, node_tables(circuit, variables, cap)[circuit.root])


def check_deterministic(circuit: NnfCircuit, cap: int = None) -> List[int]:
    """
    OR nodes with two children that share a model over var(root).

    Raises:
        TooLarge: If var(root) exceeds the truth-table cap.
    """
    tables = node_tables(circuit, cap=cap)
    violations = []
    for index, node in enumerate(circuit.nodes):
        if node.kind != OR:
            continue
        seen = 0
        for child in node.children:
            if seen & tables[child]:
                violations.append(index)
                break
            seen |= tables[child]
    return violations


def _forced_literals(circuit: NnfCircuit) -> List[frozenset]:
    """Per node, literals true in every model of the node."""
    forced = []
    for node in circuit.nodes:
        if node.kind == LITERAL:
            forced.append(frozenset({node.literal}))
        elif node.kind == AND:
            union = frozenset()
            for child in node.children:
                union |= forced[child]
            forced.append(union)
        elif node.children:
            common = forced[node.children[0]]
            for child in node.children[1:]:
                common &= forced[child]
            forced.append(common)
        else:
            forced.append(frozenset())
    return forced


def certify_deterministic(circuit: NnfCircuit) -> List[int]:
    """
    OR nodes without a structural determinism certificate.

    An OR node is certified when it has at most one child, or exactly two
    children and a decision variable d such that one child forces d and the
    other forces not d.
    """
    forced = _forced_literals(circuit)
    uncertified = []
    for index, node in enumerate(circuit.nodes):
        if node.kind != OR or len(node.children) <= 1:
            continue
        d = node.decision
        if d != 0 and len(node.children) == 2:
            first, second = (forced[c] for c in node.children)
            if (d in first and -d in second) or (-d in first and d in second):
                continue
        uncertified.append(index)
    return uncertified


def evaluate(circuit: NnfCircuit, assignment: Mapping[int, int]) -> int:
    """
    Value at the sink: AND is the minimum and OR the maximum over children.

    Raises:
        IncompleteAssignment: If a variable of the circuit is unassigned.
    """
    missing = [v for v in circuit.variables() if v not in assignment]
    if missing:
        raise IncompleteAssignment(missing)
    values: Dict[int, int] = {}
    for index, node in enumerate(circuit.nodes):
        if node.kind == LITERAL:
            bit = 1 if assignment[abs(node.literal)] else 0
            values[index] = bit if node.literal > 0 else 1 - bit
        elif node.kind == AND:
            values[index] = min((values[c] for c in node.children), default=1)
        else:
            values[index] = max((values[c] for c in node.children), default=0)
    return values[circuit.root]

"""
Forgetting (existential projection) and model counting on DNNF circuits.
"""

import logging
from typing import Iterable

from config import Config
from codewidth.core.exceptions import NotDecomposable, NotDeterministic, ValidationError
from .checks import certify_deterministic, check_decomposable, check_deterministic
from .circuit import AND, LITERAL, NnfCircuit, NnfNode

logger = logging.getLogger(__name__)


def forget(circuit: NnfCircuit, variables: Iterable[int]) -> NnfCircuit:
    """
    Existentially quantifies `variables` by replacing their literals with
    the constant true. The node list keeps its shape, so node and edge
    counts are unchanged; OR nodes deciding on a forgotten variable lose
    their decision annotation.

    Raises:
        NotDecomposable: Literal substitution is only sound on DNNF.
    """
    violations = check_decomposable(circuit)
    if violations:
        raise NotDecomposable(violations)
    drop = {abs(v) for v in variables}
    nodes = []
    for node in circuit.nodes:
        if node.kind == LITERAL and abs(node.literal) in drop:
            nodes.append(NnfNode(AND))
        elif node.kind != LITERAL and node.decision in drop:
            nodes.append(NnfNode(node.kind, node.children, decision=0))
        else:
            nodes.append(node)
    result = NnfCircuit(tuple(nodes), circuit.num_vars)
    logger.debug(f"Forgot {len(drop)} variables; {result.node_count} nodes, {result.edge_count} edges")
    return result


def require_deterministic(circuit: NnfCircuit):
    """
    Structural certificate first; uncertified OR nodes are checked by
    brute force when var(root) fits the truth-table cap.

    Raises:
        NotDeterministic: If determinism is refuted or cannot be established.
    """
    uncertified = certify_deterministic(circuit)
    if not uncertified:
        return
    if len(circuit.variables()) > Config.TRUTH_TABLE_VAR_CAP:
        raise NotDeterministic(
            uncertified,
            user_message=f"{len(uncertified)} OR nodes have no determinism certificate and the "
                         f"circuit is too large for the brute-force check.")
    logger.warning(f"{len(uncertified)} OR nodes lack a certificate; checking by truth tables")
    violations = check_deterministic(circuit)
    if violations:
        raise NotDeterministic(violations)


def count_models(circuit: NnfCircuit, over: Iterable[int] = None) -> int:
    """
    Exact model count over `over` (default var(root)), smoothing on the fly:
    each OR child is weighted by 2^(variables of the OR node it lacks).

    Raises:
        NotDecomposable: If an AND node has children sharing a variable.
        NotDeterministic: See require_deterministic.
    """
    violations = check_decomposable(circuit)
    if violations:
        raise NotDecomposable(violations)
    require_deterministic(circuit)

    root_vars = set(circuit.variables())
    over = root_vars if over is None else {abs(v) for v in over}
    if not root_vars <= over:
        raise ValidationError(
            f"Counting scope misses circuit variables {sorted(root_vars - over)}", field="over")

    masks = circuit.var_masks
    counts = []
    for index, node in enumerate(circuit.nodes):
        if node.kind == LITERAL:
            counts.append(1)
        elif node.kind == AND:
            product = 1
            for child in node.children:
                product *= counts[child]
            counts.append(product)
        else:
            width = masks[index].bit_count()
            counts.append(sum(counts[c] << (width - masks[c].bit_count()) for c in node.children))
    return counts[circuit.root] << (len(over) - len(root_vars))

"""
Exhaustive DPLL with component decomposition and caching, recorded as a
decision-DNNF.

Every branch on v becomes OR(AND(v, F|v), AND(-v, F|-v)) with decision
variable v. Unit propagation runs before each decision and the implied
literals become children of the branch's AND node. Variable-disjoint
components of the residual formula are compiled separately and joined
under AND; residual formulas seen before are answered from the cache.
"""

import logging
import time
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from config import Config
from codewidth.cnfgen import CnfFormula
from codewidth.core.exceptions import BudgetExceeded, ValidationError
from codewidth.dnnf import CircuitBuilder, NnfCircuit

logger = logging.getLogger(__name__)

HEURISTICS = ("fixed", "max-occurrence")

Residual = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class CompileStats:
    nodes: int
    edges: int
    cache_hits: int
    components_split: int
    decisions: int
    wall_ms: float

    def describe(self) -> str:
        return (f"nodes={self.nodes} edges={self.edges} decisions={self.decisions} "
                f"cache_hits={self.cache_hits} components_split={self.components_split}")


def _condition(clauses: Sequence[Tuple[int, ...]], lit: int) -> Optional[List[Tuple[int, ...]]]:
    """Clauses under lit = true; None if a clause becomes empty."""
    result = []
    for clause in clauses:
        if lit in clause:
            continue
        if -lit in clause:
            clause = tuple(other for other in clause if other != -lit)
            if not clause:
                return None
        result.append(clause)
    return result


def _propagate(clauses: List[Tuple[int, ...]]):
    """Unit propagation; returns (implied literals, residual) or None on conflict."""
    implied = []
    while True:
        unit = next((clause[0] for clause in clauses if len(clause) == 1), None)
        if unit is None:
            return implied, clauses
        implied.append(unit)
        clauses = _condition(clauses, unit)
        if clauses is None:
            return None


def _components(clauses: Sequence[Tuple[int, ...]]) -> List[List[Tuple[int, ...]]]:
    """Variable-connected groups of clauses, ordered by smallest variable."""
    parent = {}

    def find(v):
        parent.setdefault(v, v)
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for clause in clauses:
        first = find(abs(clause[0]))
        for lit in clause[1:]:
            other = find(abs(lit))
            if other != first:
                parent[other] = first
    groups: Dict[int, List[Tuple[int, ...]]] = {}
    for clause in clauses:
        groups.setdefault(find(abs(clause[0])), []).append(clause)
    return sorted(groups.values(), key=lambda group: min(abs(lit) for c in group for lit in c))


def _canonical(clauses: Sequence[Tuple[int, ...]]) -> Residual:
    return tuple(sorted(set(tuple(sorted(clause)) for clause in clauses)))


class _Compiler:

    def __init__(self, heuristic: str, cache: bool, budget: int):
        self.builder = CircuitBuilder()
        self.heuristic = heuristic
        self.use_cache = cache
        self.budget = budget
        self.cache: Dict[Residual, int] = {}
        self.cache_hits = 0
        self.components_split = 0
        self.decisions = 0

    def _check_budget(self):
        if len(self.builder) > self.budget:
            raise BudgetExceeded(self.budget, debug_info={"decisions": self.decisions})

    def _choose(self, clauses: Residual) -> int:
        if self.heuristic == "fixed":
            return min(abs(lit) for clause in clauses for lit in clause)
        occurrences: Dict[int, int] = {}
        for clause in clauses:
            for lit in clause:
                occurrences[abs(lit)] = occurrences.get(abs(lit), 0) + 1
        return min(occurrences, key=lambda v: (-occurrences[v], v))

    def formula(self, clauses: List[Tuple[int, ...]]) -> int:
        propagated = _propagate(clauses)
        if propagated is None:
            return self.builder.false()
        implied, residual = propagated
        children = [self.builder.literal(lit) for lit in sorted(implied, key=abs)]
        groups = _components(residual)
        if len(groups) > 1:
            self.components_split += len(groups) - 1
        for group in groups:
            child = self.component(_canonical(group))
            if self.builder.is_false(child):
                return child
            children.append(child)
        node = self.builder.conjoin(children)
        self._check_budget()
        return node

    def component(self, clauses: Residual) -> int:
        if self.use_cache and clauses in self.cache:
            self.cache_hits += 1
            return self.cache[clauses]
        v = self._choose(clauses)
        self.decisions += 1
        branches = []
        for lit in (v, -v):
            conditioned = _condition(clauses, lit)
            if conditioned is None:
                continue
            sub = self.formula(conditioned)
            branches.append(self.builder.conjoin([self.builder.literal(lit), sub]))
        node = self.builder.disjoin(branches, decision=v)
        self._check_budget()
        if self.use_cache:
            self.cache[clauses] = node
        return node


def compile_dpll(formula: CnfFormula, heuristic: str = "fixed", cache: bool = True,
                 budget: int = None) -> Tuple[NnfCircuit, CompileStats]:
    """
    Compiles a CNF formula into an equivalent decision-DNNF.

    Args:
        heuristic: "fixed" branches on the smallest variable, "max-occurrence"
            on the variable with the most occurrences in the residual formula.
        cache: Share residual formulas seen before.
        budget: Maximum number of circuit nodes; Config.COMPILE_BUDGET by default.

    Raises:
        BudgetExceeded: If the node budget is exhausted; no circuit is returned.
    """
    if heuristic not in HEURISTICS:
        raise ValidationError(f"Unknown branching heuristic {heuristic!r}; "
                              f"choose one of {', '.join(HEURISTICS)}", field="heuristic")
    budget = Config.COMPILE_BUDGET if budget is None else budget
    started = time.perf_counter()
    compiler = _Compiler(heuristic, cache, budget)
    if any(len(clause) == 0 for clause in formula.clauses):
        root = compiler.builder.false()
    else:
        root = compiler.formula([tuple(clause) for clause in formula.clauses])
    circuit = compiler.builder.build(root, num_vars=formula.num_vars)
    stats = CompileStats(
        nodes=circuit.node_count,
        edges=circuit.edge_count,
        cache_hits=compiler.cache_hits,
        components_split=compiler.components_split,
        decisions=compiler.decisions,
        wall_ms=(time.perf_counter() - started) * 1000.0,
    )
    logger.info(f"Compiled {formula.num_vars} vars / {formula.num_clauses} clauses: {stats.describe()}")
    return circuit, stats

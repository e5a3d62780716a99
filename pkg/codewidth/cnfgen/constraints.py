"""
Multi-variable constraints, their canonical CNF, and abstract instances.

A canonical encoding emits one clause per rejected scope assignment and
every clause contains every scope variable. The width arguments rely on
this: all clauses of one constraint share a neighborhood type.
"""

import logging
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, List, Optional, Sequence, Tuple

from config import Config
from codewidth.common.utils import word_from_int
from codewidth.core.exceptions import ParseError, ScopeTooLarge, ValidationError
from codewidth.f2code import F2Matrix
from .formula import Clause, CnfFormula, Provenance
from .variables import Variable, VariableTable, X, Z, parse_variable

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ParityChain:
    """
    z[row,end] = z[row,start] + sum_{j=start+1..end} a[row,j] * x[j].

    z[row,0] is the constant 0 and is never a variable. With `final` the
    chain also requires z[row,end] = 0.
    """

    row: int
    start: int
    end: int
    coefficients: Tuple[int, ...]
    final: bool = False

    def __post_init__(self):
        if len(self.coefficients) != self.end - self.start or self.end <= self.start:
            raise ValidationError(
                f"Chain {self.start}..{self.end} needs {self.end - self.start} coefficients",
                field="coefficients")

    def variables(self) -> Tuple[Variable, ...]:
        left = (Z(self.row, self.start),) if self.start > 0 else ()
        xs = tuple(X(j) for j in range(self.start + 1, self.end + 1))
        return left + xs + (Z(self.row, self.end),)

    def holds(self, value_of: Callable[[Variable], int]) -> bool:
        parity = value_of(Z(self.row, self.start)) if self.start > 0 else 0
        for j, a in zip(range(self.start + 1, self.end + 1), self.coefficients):
            if a:
                parity ^= value_of(X(j))
        if value_of(Z(self.row, self.end)) != parity:
            return False
        return not (self.final and parity)

    def describe(self) -> str:
        r, j1, j2 = self.row, self.start, self.end
        text = (f"z[{r},{j2}] = z[{r},{j1}] + sum a[{r},j]*x[j], j={j1 + 1}..{j2}"
                f" ; a = {''.join(str(a) for a in self.coefficients)}")
        return text + (" ; final" if self.final else "")


_CHAIN_RE = re.compile(
    r"z\[(\d+),(\d+)\] = z\[(\d+),(\d+)\] \+ sum a\[(\d+),j\]\*x\[j\], "
    r"j=(\d+)\.\.(\d+) ; a = ([01]+)( ; final)?$")


def parse_chain(text: str) -> ParityChain:
    match = _CHAIN_RE.match(text.strip())
    if not match:
        raise ParseError(f"bad parity chain {text!r}")
    row, end, row2, start, row3, first, last, bits, final = match.groups()
    if not (row == row2 == row3) or int(first) != int(start) + 1 or int(last) != int(end):
        raise ParseError(f"inconsistent parity chain {text!r}")
    return ParityChain(int(row), int(start), int(end), tuple(int(ch) for ch in bits), bool(final))


@dataclass(frozen=True)
class ConstraintBlock:
    """
    A constraint over an ordered scope.

    Acceptance is either the conjunction of parity chains (all generated
    constraints) or an explicit predicate over the scope values.
    """

    scope: Tuple[Variable, ...]
    chains: Tuple[ParityChain, ...] = ()
    predicate: Optional[Callable[[Tuple[int, ...]], bool]] = None
    label: str = ""

    def __post_init__(self):
        if len(set(self.scope)) != len(self.scope):
            raise ValidationError(f"Constraint {self.label} has a repeated scope variable",
                                  field="scope")
        in_scope = set(self.scope)
        for chain in self.chains:
            missing = [str(v) for v in chain.variables() if v not in in_scope]
            if missing:
                raise ValidationError(
                    f"Chain of {self.label} uses variables {missing} outside the scope",
                    field="chains")

    @cached_property
    def _positions(self):
        return {var: p for p, var in enumerate(self.scope)}

    def accepts(self, values: Sequence[int]) -> bool:
        """Evaluates the constraint on scope values given in scope order."""
        values = tuple(values)
        if self.predicate is not None:
            return bool(self.predicate(values))
        positions = self._positions
        return all(chain.holds(lambda var: values[positions[var]]) for chain in self.chains)


def constraint_to_clauses(block: ConstraintBlock, table: VariableTable,
                          cap: int = None) -> List[Clause]:
    """
    Canonical CNF: one full-scope clause per rejected assignment.

    Raises:
        ScopeTooLarge: If the scope exceeds the materialization cap.
    """
    cap = Config.MATERIALIZATION_CAP if cap is None else cap
    width = len(block.scope)
    if width > cap:
        raise ScopeTooLarge(width, cap, debug_info={"constraint": block.label})
    indices = [table.index(var) for var in block.scope]
    clauses = []
    for assignment in range(1 << width):
        values = word_from_int(assignment, width)
        if not block.accepts(values):
            clauses.append(tuple(-idx if bit else idx for idx, bit in zip(indices, values)))
    return clauses


@dataclass(frozen=True)
class AbstractInstance:
    """Constraint scopes and predicates without clause expansion."""

    variables: VariableTable
    blocks: Tuple[ConstraintBlock, ...]
    units: Tuple[Variable, ...] = ()
    provenance: Optional[Provenance] = None
    matrix: Optional[F2Matrix] = None

    def max_scope(self) -> int:
        return max((len(block.scope) for block in self.blocks), default=0)


def materialize(instance: AbstractInstance, cap: int = None) -> CnfFormula:
    """Expands every block canonically, then appends the negative unit clauses."""
    cap = Config.MATERIALIZATION_CAP if cap is None else cap
    widest = instance.max_scope()
    if widest > cap:
        raise ScopeTooLarge(widest, cap)
    clauses = []
    for block in instance.blocks:
        clauses.extend(constraint_to_clauses(block, instance.variables, cap=cap))
    for var in instance.units:
        clauses.append((-instance.variables.index(var),))
    logger.info(
        f"Materialized {len(instance.blocks)} constraints into {len(clauses)} clauses "
        f"over {len(instance.variables)} variables")
    return CnfFormula(instance.variables, tuple(clauses), instance.provenance, instance.matrix)


def write_abstract(instance: AbstractInstance) -> str:
    """Structured text listing each constraint's scope and parity chains."""
    from .dimacs import header_comments

    lines = header_comments(instance.variables, instance.provenance, instance.matrix)
    lines.append(f"p abstract {len(instance.variables)} {len(instance.blocks)} {len(instance.units)}")
    for number, block in enumerate(instance.blocks, start=1):
        if block.predicate is not None:
            raise ValidationError(
                f"Constraint {block.label or number} has no closed form to write", field="blocks")
        lines.append(f"constraint {number} {block.label}".rstrip())
        lines.append("scope " + " | ".join(str(var) for var in block.scope))
        for chain in block.chains:
            lines.append("chain " + chain.describe())
    for var in instance.units:
        lines.append(f"unit {var}")
    return "\n".join(lines) + "\n"


def parse_abstract(text: str) -> AbstractInstance:
    """Inverse of write_abstract."""
    from .dimacs import CommentState

    comments = CommentState()
    blocks = []
    units = []
    pending = None
    header = None

    def close_pending():
        if pending is not None:
            scope, chains, label = pending
            blocks.append(ConstraintBlock(tuple(scope), tuple(chains), label=label))

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            if line.startswith("c "):
                comments.feed(line, line_number)
            elif line.startswith("p abstract"):
                header = [int(tok) for tok in line.split()[2:]]
            elif line.startswith("constraint"):
                close_pending()
                parts = line.split(maxsplit=2)
                pending = ([], [], parts[2] if len(parts) > 2 else "")
            elif line.startswith("scope"):
                body = line[len("scope"):].strip()
                pending[0].extend(parse_variable(part.split()) for part in body.split("|") if part.strip())
            elif line.startswith("chain"):
                pending[1].append(parse_chain(line[len("chain"):]))
            elif line.startswith("unit"):
                units.append(parse_variable(line.split()[1:]))
            else:
                raise ParseError(f"unexpected line {line!r}", line_number=line_number)
        except ParseError as exc:
            if exc.line_number is None:
                raise ParseError(exc.message, line_number=line_number)
            raise
        except (TypeError, ValueError, IndexError):
            raise ParseError(f"malformed line {line!r}", line_number=line_number)
    close_pending()
    if header is None or len(header) != 3:
        raise ParseError("missing 'p abstract <vars> <constraints> <units>' line")
    table = comments.table(header[0])
    if len(blocks) != header[1] or len(units) != header[2]:
        raise ParseError("constraint or unit count does not match the header")
    return AbstractInstance(table, tuple(blocks), tuple(units), comments.provenance, comments.matrix())

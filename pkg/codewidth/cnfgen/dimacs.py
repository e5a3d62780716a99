"""
DIMACS CNF with role comments.

    c generator blockpw k=1 b=2 c=1 seed=5
    c matrix 2 4
    c row 0110
    c row 1011
    c var 1 = x 1
    c var 5 = z 1 1
    p cnf <#vars> <#clauses>
    1 -5 0
"""

import logging
import re
from typing import List, Optional

from codewidth.core.exceptions import ParseError, ValidationError
from codewidth.f2code import F2Matrix
from .formula import CnfFormula, Provenance
from .variables import V, VariableTable, parse_variable

logger = logging.getLogger(__name__)

_GENERATOR_RE = re.compile(r"generator (\w+) k=(\d+) b=(\d+) c=(\d+) seed=(-?\d+|none)$")
# A comment is metadata only in one of these shapes; anything else is free text.
_METADATA_SHAPES = {
    "generator": re.compile(r"generator \S+ k=\S* b=\S* c=\S* seed=\S*$"),
    "matrix": re.compile(r"matrix \d+ \d+$"),
    "row": re.compile(r"row [01]+$"),
    "var": re.compile(r"var \d+ = .+$"),
}


def metadata_keyword(body: str) -> Optional[str]:
    """The metadata keyword of a comment body, or None for free-form comments."""
    tokens = body.split(maxsplit=1)
    if not tokens or tokens[0] not in _METADATA_SHAPES:
        return None
    if not _METADATA_SHAPES[tokens[0]].match(body):
        return None
    return tokens[0]


def header_comments(table: VariableTable, provenance: Optional[Provenance],
                    matrix: Optional[F2Matrix]) -> List[str]:
    """Comment lines shared by the DIMACS and abstract-instance formats."""
    lines = []
    if provenance is not None:
        lines.append(f"c {provenance.to_comment()}")
    if matrix is not None:
        lines.append(f"c matrix {matrix.num_rows} {matrix.num_cols}")
        for i in range(1, matrix.num_rows + 1):
            lines.append("c row " + "".join(str(b) for b in matrix.row_bits(i)))
    for idx, var in enumerate(table, start=1):
        if var.role != "v":
            lines.append(f"c var {idx} = {var}")
    return lines


class CommentState:
    """Accumulates what the header comments say about a formula."""

    def __init__(self):
        self.provenance = None
        self.shape = None
        self.rows = []
        self.roles = {}

    def feed(self, line: str, line_number: int):
        body = line[1:].strip()
        keyword = metadata_keyword(body)
        if keyword is None:
            return
        if keyword == "generator":
            match = _GENERATOR_RE.match(body)
            if not match:
                raise ParseError(f"bad generator comment {body!r}", line_number=line_number)
            name, k, b, c, seed = match.groups()
            try:
                self.provenance = Provenance(
                    name, int(k), int(b), int(c), None if seed == "none" else int(seed))
            except ValidationError as exc:
                raise ParseError(exc.message, line_number=line_number)
        elif keyword == "matrix":
            parts = body.split()
            self.shape = (int(parts[1]), int(parts[2]))
        elif keyword == "row":
            bits = body.split()[1]
            if self.shape is None or len(bits) != self.shape[1]:
                raise ParseError(f"bad matrix row {bits!r}", line_number=line_number)
            self.rows.append([int(ch) for ch in bits])
        else:
            parts = body.split()
            try:
                self.roles[int(parts[1])] = parse_variable(parts[3:])
            except ParseError as exc:
                raise ParseError(exc.message, line_number=line_number)

    def matrix(self) -> Optional[F2Matrix]:
        if self.shape is None:
            return None
        if len(self.rows) != self.shape[0]:
            raise ParseError(f"matrix comment announces {self.shape[0]} rows, found {len(self.rows)}")
        return F2Matrix.from_lists(self.rows, num_cols=self.shape[1])

    def table(self, num_vars: int) -> VariableTable:
        unknown = [idx for idx in self.roles if not 1 <= idx <= num_vars]
        if unknown:
            raise ParseError(f"role comment for index {unknown[0]} outside 1..{num_vars}")
        try:
            return VariableTable(tuple(self.roles.get(idx, V(idx)) for idx in range(1, num_vars + 1)))
        except ValidationError as exc:
            raise ParseError(exc.message)


def write_dimacs(formula: CnfFormula) -> str:
    """DIMACS text including generator, matrix and role comments."""
    lines = header_comments(formula.variables, formula.provenance, formula.matrix)
    lines.append(f"p cnf {formula.num_vars} {formula.num_clauses}")
    for clause in formula.clauses:
        lines.append(" ".join(str(lit) for lit in clause) + " 0")
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> CnfFormula:
    """
    Parses DIMACS CNF. Variables without a role comment become generic `v` variables.

    Raises:
        ParseError: With the 1-based line number of the offending line.
    """
    comments = CommentState()
    header = None
    clauses = []
    current = []
    last_line = 0

    for line_number, raw in enumerate(text.splitlines(), start=1):
        last_line = line_number
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        if line.startswith("c"):
            comments.feed(line, line_number)
            continue
        if line.startswith("p"):
            parts = line.split()
            if header is not None:
                raise ParseError("duplicate problem line", line_number=line_number)
            if len(parts) != 4 or parts[1] != "cnf" or not parts[2].isdigit() or not parts[3].isdigit():
                raise ParseError(f"expected 'p cnf <vars> <clauses>', got {line!r}", line_number=line_number)
            header = (int(parts[2]), int(parts[3]))
            continue
        if header is None:
            raise ParseError("clause before the problem line", line_number=line_number)
        for token in line.split():
            try:
                lit = int(token)
            except ValueError:
                raise ParseError(f"invalid literal {token!r}", line_number=line_number)
            if lit == 0:
                clauses.append((tuple(current), line_number))
                current = []
            elif abs(lit) > header[0]:
                raise ParseError(f"literal {lit} exceeds {header[0]} variables", line_number=line_number)
            else:
                current.append(lit)

    if header is None:
        raise ParseError("missing problem line", line_number=last_line or 1)
    if current:
        raise ParseError("last clause is not terminated by 0", line_number=last_line)
    if len(clauses) != header[1]:
        raise ParseError(
            f"header announces {header[1]} clauses, found {len(clauses)}", line_number=last_line)
    for clause, line_number in clauses:
        if len({abs(lit) for lit in clause}) != len(clause):
            raise ParseError("clause mentions a variable twice", line_number=line_number)

    table = comments.table(header[0])
    formula = CnfFormula(table, tuple(clause for clause, _ in clauses),
                         comments.provenance, comments.matrix())
    logger.debug(f"Parsed DIMACS with {formula.num_vars} variables and {formula.num_clauses} clauses")
    return formula

"""
CNF formulas over typed variables, generator parameters and provenance.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from codewidth.core.exceptions import ParameterMismatch, ValidationError
from codewidth.f2code import F2Matrix
from .variables import VariableTable

Clause = Tuple[int, ...]

GENERATORS = ("naive", "blockpw", "nd")


@dataclass(frozen=True)
class GeneratorParams:
    """
    Block parameters of the encoders.

    k row blocks of b equations each; nd mode additionally uses c column
    blocks per row block, so n = c*k*b. Typical settings are b = log2 n
    and c = 32.
    """

    k: int
    b: int
    c: int = 1
    seed: Optional[int] = None

    def __post_init__(self):
        for name in ("k", "b", "c"):
            if getattr(self, name) < 1:
                raise ParameterMismatch(f"{name} must be at least 1, got {getattr(self, name)}")

    @property
    def num_rows(self) -> int:
        return self.k * self.b

    @property
    def nd_length(self) -> int:
        return self.c * self.k * self.b

    def require_blocked(self, matrix: F2Matrix):
        if matrix.num_rows != self.num_rows:
            raise ParameterMismatch(
                f"Matrix has {matrix.num_rows} rows but k*b = {self.k}*{self.b} = {self.num_rows}",
                debug_info={"m": matrix.num_rows, "k": self.k, "b": self.b})
        if matrix.num_cols < 2:
            raise ParameterMismatch("Blocked encoding needs n >= 2")

    def require_nd(self, matrix: F2Matrix):
        self.require_blocked(matrix)
        if matrix.num_cols != self.nd_length:
            raise ParameterMismatch(
                f"nd mode needs n = c*k*b = {self.nd_length}, matrix has n = {matrix.num_cols}",
                debug_info={"n": matrix.num_cols, "c": self.c, "k": self.k, "b": self.b})


@dataclass(frozen=True)
class Provenance:
    """Which generator produced a formula, with which parameters."""

    generator: str
    k: int
    b: int
    c: int
    seed: Optional[int] = None

    def __post_init__(self):
        if self.generator not in GENERATORS:
            raise ValidationError(f"Unknown generator {self.generator!r}", field="generator")

    @property
    def params(self) -> GeneratorParams:
        return GeneratorParams(self.k, self.b, self.c, self.seed)

    def to_comment(self) -> str:
        seed = "none" if self.seed is None else self.seed
        return f"generator {self.generator} k={self.k} b={self.b} c={self.c} seed={seed}"


@dataclass(frozen=True)
class CnfFormula:
    """Clauses of signed DIMACS literals over a variable table."""

    variables: VariableTable
    clauses: Tuple[Clause, ...]
    provenance: Optional[Provenance] = None
    matrix: Optional[F2Matrix] = None

    def __post_init__(self):
        num_vars = len(self.variables)
        for position, clause in enumerate(self.clauses, start=1):
            seen = set()
            for lit in clause:
                var = abs(lit)
                if lit == 0 or var > num_vars:
                    raise ValidationError(
                        f"Clause {position} has literal {lit} outside 1..{num_vars}",
                        field="clauses")
                if var in seen:
                    raise ValidationError(
                        f"Clause {position} mentions variable {var} twice", field="clauses")
                seen.add(var)

    @property
    def num_vars(self) -> int:
        return len(self.variables)

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def x_indices(self) -> Tuple[int, ...]:
        return tuple(self.variables.index(v) for v in self.variables.x_variables())


def formula_size(formula: CnfFormula) -> int:
    """Overall number of literal occurrences."""
    return sum(len(clause) for clause in formula.clauses)

"""
Typed CNF variables and the descriptor <-> DIMACS index table.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterator, NamedTuple, Sequence, Tuple

from codewidth.core.exceptions import ParseError, ValidationError


class Variable(NamedTuple):
    """A variable descriptor: code bit x_j, parity accumulator z_{ij}, or generic v_idx."""

    role: str
    row: int
    col: int

    def __str__(self):
        if self.role == "z":
            return f"z {self.row} {self.col}"
        return f"{self.role} {self.col}"


def X(j: int) -> Variable:
    return Variable("x", 0, j)


def Z(i: int, j: int) -> Variable:
    return Variable("z", i, j)


def V(idx: int) -> Variable:
    return Variable("v", 0, idx)


def parse_variable(tokens: Sequence[str]) -> Variable:
    """Reads 'x j', 'z i j' or 'v idx' (already split into tokens)."""
    try:
        if tokens[0] == "z" and len(tokens) == 3:
            return Z(int(tokens[1]), int(tokens[2]))
        if tokens[0] in ("x", "v") and len(tokens) == 2:
            return Variable(tokens[0], 0, int(tokens[1]))
    except ValueError:
        pass
    raise ParseError(f"bad variable descriptor {' '.join(tokens)!r}")


@dataclass(frozen=True)
class VariableTable:
    """Ordered variable descriptors; position p holds DIMACS index p + 1."""

    variables: Tuple[Variable, ...]
    _index: Dict[Variable, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        index = {}
        for position, var in enumerate(self.variables, start=1):
            if var in index:
                raise ValidationError(f"Variable {var} listed twice", field="variables")
            index[var] = position
        for var, position in index.items():
            if var.role == "x" and position != var.col:
                raise ValidationError(
                    f"Code bit {var} must have DIMACS index {var.col}, has {position}",
                    field="variables")
        object.__setattr__(self, "_index", index)

    def __len__(self):
        return len(self.variables)

    def __iter__(self) -> Iterator[Variable]:
        return iter(self.variables)

    def __contains__(self, var) -> bool:
        return var in self._index

    def index(self, var: Variable) -> int:
        try:
            return self._index[var]
        except KeyError:
            raise ValidationError(f"Unknown variable {var}", field="variable")

    def variable(self, idx: int) -> Variable:
        if not 1 <= idx <= len(self.variables):
            raise ValidationError(f"DIMACS index {idx} out of range", field="index")
        return self.variables[idx - 1]

    def x_variables(self) -> Tuple[Variable, ...]:
        return tuple(v for v in self.variables if v.role == "x")

    def z_variables(self) -> Tuple[Variable, ...]:
        return tuple(v for v in self.variables if v.role == "z")


def code_table(n: int, z_vars: Sequence[Variable]) -> VariableTable:
    """x_1..x_n first, then the given accumulators."""
    return VariableTable(tuple(X(j) for j in range(1, n + 1)) + tuple(z_vars))

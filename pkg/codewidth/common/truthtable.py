"""
Truth tables over small variable lists, stored as Python ints.

Bit `t` of `bits` is the function value on the assignment whose variable
at position `p` takes value `(t >> p) & 1`.
"""

from dataclasses import dataclass
from typing import Callable, Hashable, Iterator, Mapping, Sequence, Tuple

from codewidth.core.exceptions import ParseError, ValidationError


def full_mask(num_vars: int) -> int:
    """All 2^num_vars assignments."""
    return (1 << (1 << num_vars)) - 1


def position_mask(num_vars: int, position: int) -> int:
    """Assignments in which the variable at `position` is 1."""
    half = 1 << position
    period = half << 1
    block = ((1 << half) - 1) << half
    repeats = (1 << num_vars) // period
    # block repeated every `period` bits
    return block * (((1 << (period * repeats)) - 1) // ((1 << period) - 1))


@dataclass(frozen=True)
class TruthTable:
    """A boolean function on an ordered variable list."""

    variables: Tuple[Hashable, ...]
    bits: int

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise ValidationError("Truth table variables must be distinct", field="variables")
        if self.bits < 0 or self.bits > full_mask(len(self.variables)):
            raise ValidationError("Truth table has bits beyond 2^n", field="bits")

    @classmethod
    def from_function(cls, variables: Sequence[Hashable],
                      fn: Callable[[Mapping[Hashable, int]], int]) -> "TruthTable":
        """Tabulates fn over all assignments to variables."""
        variables = tuple(variables)
        bits = 0
        for index in range(1 << len(variables)):
            if fn(assignment_of(variables, index)):
                bits |= 1 << index
        return cls(variables, bits)

    @classmethod
    def constant(cls, variables: Sequence[Hashable], value: int) -> "TruthTable":
        variables = tuple(variables)
        return cls(variables, full_mask(len(variables)) if value else 0)

    @classmethod
    def literal(cls, variables: Sequence[Hashable], variable: Hashable,
                positive: bool = True) -> "TruthTable":
        variables = tuple(variables)
        mask = position_mask(len(variables), variables.index(variable))
        return cls(variables, mask if positive else full_mask(len(variables)) & ~mask)

    @property
    def num_vars(self) -> int:
        return len(self.variables)

    def value(self, assignment: Mapping[Hashable, int]) -> int:
        index = 0
        for p, var in enumerate(self.variables):
            if assignment[var]:
                index |= 1 << p
        return (self.bits >> index) & 1

    def models(self) -> Iterator[dict]:
        """Satisfying assignments in index order."""
        for index in range(1 << self.num_vars):
            if (self.bits >> index) & 1:
                yield assignment_of(self.variables, index)

    def count(self) -> int:
        return self.bits.bit_count()

    def project(self, keep: Sequence[Hashable]) -> "TruthTable":
        """Existential projection onto the variables in `keep` (order kept as given)."""
        keep = tuple(keep)
        positions = [self.variables.index(v) for v in keep]
        bits = 0
        for index in range(1 << self.num_vars):
            if (self.bits >> index) & 1:
                reduced = 0
                for q, p in enumerate(positions):
                    if (index >> p) & 1:
                        reduced |= 1 << q
                bits |= 1 << reduced
        return TruthTable(keep, bits)

    def reorder(self, variables: Sequence[Hashable]) -> "TruthTable":
        """Same function over a permutation or superset of the variables."""
        variables = tuple(variables)
        missing = set(self.variables) - set(variables)
        if missing:
            raise ValidationError(f"Cannot drop variables {sorted(map(str, missing))}", field="variables")
        positions = [variables.index(v) for v in self.variables]
        bits = 0
        for index in range(1 << len(variables)):
            own = 0
            for q, p in enumerate(positions):
                if (index >> p) & 1:
                    own |= 1 << q
            if (self.bits >> own) & 1:
                bits |= 1 << index
        return TruthTable(variables, bits)


def assignment_of(variables: Sequence[Hashable], index: int) -> dict:
    """Assignment encoded by a truth-table index."""
    return {var: (index >> p) & 1 for p, var in enumerate(variables)}


def write_truth_table(table: TruthTable) -> str:
    """Hex bit-string with a variable-list header."""
    digits = max(1, (1 << table.num_vars) // 4)
    header = " ".join(str(v) for v in table.variables)
    return f"vars {header}".rstrip() + f"\n{table.bits:0{digits}x}\n"


def parse_truth_table(text: str) -> TruthTable:
    """Inverse of write_truth_table; variables are read back as strings."""
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if len(lines) != 2 or not lines[0].startswith("vars"):
        raise ParseError("expected 'vars ...' header followed by one hex line", line_number=1)
    variables = tuple(lines[0].split()[1:])
    try:
        bits = int(lines[1], 16)
    except ValueError:
        raise ParseError(f"invalid hex digits {lines[1]!r}", line_number=2)
    if bits > full_mask(len(variables)):
        raise ParseError("hex value has more than 2^n bits", line_number=2)
    return TruthTable(variables, bits)

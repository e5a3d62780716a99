"""
Rectangle cover text format.

    cover <t> beta <p/q>
    rectangle
    side x1 y1 = 9
    side x2 y2 = 9

Each side lists its variables and the hex truth table over them (bit order
as in the truth-table format).
"""

from fractions import Fraction
from typing import Tuple

from codewidth.common.truthtable import TruthTable, full_mask
from codewidth.core.exceptions import ParseError
from .rectangles import Partition, Rectangle, RectangleCover


def _side(table: TruthTable) -> str:
    digits = max(1, (1 << table.num_vars) // 4)
    names = " ".join(str(v) for v in table.variables)
    return f"side {names} = {table.bits:0{digits}x}"


def write_cover(cover: RectangleCover, beta: Fraction) -> str:
    lines = [f"cover {len(cover)} beta {Fraction(beta)}"]
    for rectangle in cover.rectangles:
        lines.append("rectangle")
        lines.append(_side(rectangle.first))
        lines.append(_side(rectangle.second))
    return "\n".join(lines) + "\n"


def _parse_side(line: str, line_number: int) -> TruthTable:
    body = line[len("side"):]
    if "=" not in body:
        raise ParseError(f"side line needs '= <hex>': {line!r}", line_number=line_number)
    names, _, digits = body.rpartition("=")
    variables = tuple(names.split())
    try:
        bits = int(digits.strip(), 16)
    except ValueError:
        raise ParseError(f"invalid hex digits {digits.strip()!r}", line_number=line_number)
    if bits > full_mask(len(variables)):
        raise ParseError("side table has more than 2^n bits", line_number=line_number)
    return TruthTable(variables, bits)


def parse_cover(text: str) -> Tuple[RectangleCover, Fraction]:
    """Inverse of write_cover; variables are read back as strings."""
    lines = [(number, line.strip()) for number, line in enumerate(text.splitlines(), start=1)
             if line.strip()]
    if not lines or not lines[0][1].startswith("cover"):
        raise ParseError("expected 'cover <t> beta <p/q>' header", line_number=1)
    header = lines[0][1].split()
    if len(header) != 4 or header[2] != "beta" or not header[1].isdigit():
        raise ParseError(f"malformed cover header {lines[0][1]!r}", line_number=lines[0][0])
    try:
        beta = Fraction(header[3])
    except ValueError:
        raise ParseError(f"invalid beta {header[3]!r}", line_number=lines[0][0])

    rectangles = []
    body = lines[1:]
    if len(body) != 3 * int(header[1]):
        raise ParseError(f"header announces {header[1]} rectangles", line_number=lines[0][0])
    for start in range(0, len(body), 3):
        (n0, marker), (n1, first), (n2, second) = body[start:start + 3]
        if marker != "rectangle" or not first.startswith("side") or not second.startswith("side"):
            raise ParseError("expected 'rectangle' followed by two 'side' lines", line_number=n0)
        left, right = _parse_side(first, n1), _parse_side(second, n2)
        rectangles.append(Rectangle(Partition(left.variables, right.variables), left, right))
    return RectangleCover(tuple(rectangles)), beta

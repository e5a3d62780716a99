import random
from fractions import Fraction

import pytest

from codewidth.common.truthtable import TruthTable, parse_truth_table, write_truth_table
from codewidth.core.exceptions import CapExceeded, ParseError, ValidationError
from codewidth.f2code import F2Matrix, LinearCode, code_truth_table, sample_parity_check
from codewidth.rectcover import (
    Partition,
    Rectangle,
    RectangleCover,
    balanced_partitions,
    is_rectangle,
    matrix_rows,
    min_cover_bruteforce,
    parse_cover,
    verify_cover,
    write_cover,
)

# Mark all tests in this file as 'unit'
pytestmark = pytest.mark.unit

HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)


def table(variables, fn):
    return TruthTable.from_function(variables, fn)


EQ2 = table(("x1", "x2", "y1", "y2"), lambda a: a["x1"] == a["y1"] and a["x2"] == a["y2"])
OR_XY = table(("x1", "y1"), lambda a: a["x1"] or a["y1"])


# ============================================================================
# Partitions and rectangles
# ============================================================================

def test_balanced_partitions():
    assert len(list(balanced_partitions(("a", "b", "c", "d"), HALF))) == 3
    # sides of size 2..4 out of 6
    assert len(list(balanced_partitions(tuple("abcdef"), THIRD))) == 25
    assert all(p.first[0] == "a" for p in balanced_partitions(tuple("abcdef"), THIRD))
    assert list(balanced_partitions(("a",), HALF)) == []


def test_partition_balance_is_exact():
    partition = Partition(("a",), ("b", "c"))
    assert partition.is_balanced(THIRD)
    assert not partition.is_balanced(HALF)
    with pytest.raises(ValidationError):
        Partition(("a",), ("a", "b"))


def test_is_rectangle_examples():
    single = Partition(("x1",), ("y1",))
    assert is_rectangle(table(("x1", "y1"), lambda a: a["x1"] and a["y1"]), single)
    assert not is_rectangle(table(("x1", "y1"), lambda a: a["x1"] != a["y1"]), single)
    assert not is_rectangle(EQ2, Partition(("x1", "x2"), ("y1", "y2")))
    assert is_rectangle(EQ2, Partition(("x1", "y1"), ("x2", "y2")))


def test_rectangle_from_function():
    partition = Partition(("x1", "y1"), ("x2", "y2"))
    rectangle = Rectangle.from_function(EQ2, partition)
    assert rectangle.function(EQ2.variables) == EQ2
    with pytest.raises(ValidationError):
        Rectangle.from_function(EQ2, Partition(("x1", "x2"), ("y1", "y2")))


# ============================================================================
# Cover verification
# ============================================================================

def test_verify_cover_accepts_eq2_rectangle():
    rectangle = Rectangle.from_function(EQ2, Partition(("x1", "y1"), ("x2", "y2")))
    report = verify_cover(EQ2, RectangleCover((rectangle,)), HALF)
    assert report.ok and report.describe() == "ok"


def test_verify_cover_violations():
    partition = Partition(("x1",), ("y1",))
    only_x = Rectangle(partition, TruthTable(("x1",), 0b10), TruthTable(("y1",), 0b11))
    report = verify_cover(OR_XY, RectangleCover((only_x,)), HALF)
    assert report.violation == "uncovered point"
    assert report.witness == {"x1": 0, "y1": 1}

    everything = Rectangle(partition, TruthTable(("x1",), 0b11), TruthTable(("y1",), 0b11))
    report = verify_cover(OR_XY, RectangleCover((everything,)), HALF)
    assert report.violation == "covered zero"
    assert report.witness == {"x1": 0, "y1": 0}

    three = table(("a", "b", "c"), lambda a: a["a"])
    lopsided = Rectangle.from_function(three, Partition(("a",), ("b", "c")))
    assert verify_cover(three, RectangleCover((lopsided,)), HALF).violation == "unbalanced partition"
    assert verify_cover(three, RectangleCover((lopsided,)), THIRD).ok

    assert verify_cover(EQ2, RectangleCover((only_x,)), HALF).violation == \
        "partition does not split the variables"


def test_empty_cover_of_constant_zero():
    assert verify_cover(TruthTable.constant(("a", "b"), 0), RectangleCover(()), HALF).ok


# ============================================================================
# Minimum covers
# ============================================================================

def test_min_cover_frozen_examples(logger):
    logger.section("test_min_cover_frozen_examples")
    assert min_cover_bruteforce(EQ2, HALF) == 1
    assert min_cover_bruteforce(TruthTable.constant(("a", "b"), 0), HALF) == 0
    assert min_cover_bruteforce(table(("x1", "y1"), lambda a: a["x1"] and a["y1"]), HALF) == 1

    parity = table(tuple(f"x{j}" for j in range(1, 7)), lambda a: sum(a.values()) % 2)
    assert min_cover_bruteforce(parity, THIRD) == 2

    paired = F2Matrix.from_lists([[1, 1, 0, 0, 0, 0], [0, 0, 1, 1, 0, 0]])
    assert min_cover_bruteforce(code_truth_table(LinearCode(paired)), THIRD) == 1


def test_min_cover_of_random_code_is_consistent():
    f = code_truth_table(LinearCode(sample_parity_check(2, 6, 4)))
    size = min_cover_bruteforce(f, THIRD)
    assert 1 <= size <= f.count()


def random_table(rng, num_vars, ones=None):
    variables = tuple(f"v{j}" for j in range(num_vars))
    if ones is None:
        return TruthTable(variables, rng.getrandbits(1 << num_vars))
    points = rng.sample(range(1 << num_vars), ones)
    return TruthTable(variables, sum(1 << p for p in points))


def row_cover(f, partition):
    """One rectangle per nonzero row of f's matrix over the partition."""
    return tuple(
        Rectangle(partition, TruthTable(partition.first, 1 << row), TruthTable(partition.second, pattern))
        for row, pattern in matrix_rows(f, partition).items())


@pytest.mark.parametrize("num_vars,ones,betas", [
    (4, None, (Fraction(1, 4), HALF)),
    (5, 8, (Fraction(1, 5), Fraction(2, 5))),
    (6, 6, (Fraction(1, 6), THIRD, HALF)),
])
@pytest.mark.parametrize("seed", range(6))
def test_min_cover_is_monotone_in_beta(num_vars, ones, betas, seed):
    f = random_table(random.Random(seed), num_vars, ones)
    sizes = [min_cover_bruteforce(f, beta) for beta in betas]
    assert sizes == sorted(sizes)


@pytest.mark.parametrize("seed", range(8))
def test_valid_covers_are_never_below_the_minimum(seed):
    rng = random.Random(seed)
    f = random_table(rng, 4)
    minimum = min_cover_bruteforce(f, HALF)
    partitions = list(balanced_partitions(f.variables, HALF))

    chosen = rng.choice(partitions)
    by_rows = RectangleCover(row_cover(f, chosen))
    assert verify_cover(f, by_rows, HALF).ok
    assert len(by_rows) >= minimum

    mixed = []
    for partition in rng.sample(partitions, 2):
        mixed.extend(row_cover(f, partition))
    rng.shuffle(mixed)
    mixed_cover = RectangleCover(tuple(mixed))
    assert verify_cover(f, mixed_cover, HALF).ok
    assert len(mixed_cover) >= minimum

    if mixed:
        # dropping rectangles never yields a valid cover below the minimum
        for size in range(len(mixed)):
            subset = RectangleCover(tuple(mixed[:size]))
            if verify_cover(f, subset, HALF).ok:
                assert size >= minimum


def test_min_cover_limits():
    wide = TruthTable.constant(tuple(f"v{j}" for j in range(9)), 1)
    with pytest.raises(CapExceeded):
        min_cover_bruteforce(wide, THIRD)
    with pytest.raises(ValidationError):
        min_cover_bruteforce(TruthTable(("a",), 0b10), HALF)
    parity = table(tuple(f"x{j}" for j in range(1, 7)), lambda a: sum(a.values()) % 2)
    with pytest.raises(CapExceeded):
        min_cover_bruteforce(parity, THIRD, cap=1)


def test_min_cover_uses_configured_beta(mocker):
    mocker.patch('codewidth.rectcover.search.Config.DEFAULT_BETA', '1/2')
    assert min_cover_bruteforce(EQ2) == 1


# ============================================================================
# Text formats
# ============================================================================

def test_cover_text_format():
    rectangle = Rectangle.from_function(EQ2, Partition(("x1", "y1"), ("x2", "y2")))
    text = write_cover(RectangleCover((rectangle,)), HALF)
    assert text.splitlines()[0] == "cover 1 beta 1/2"
    cover, beta = parse_cover(text)
    assert beta == HALF
    assert cover.rectangles == (rectangle,)
    assert verify_cover(EQ2, cover, beta).ok


@pytest.mark.parametrize("text", [
    "",
    "cover 1 beta 1/2\n",
    "cover 1 beta 1/2\nrectangle\nside a = 2\nside b = zz\n",
    "cover 1 beta 1/2\nrectangle\nside a = 7\nside b = 2\n",
    "cover 1 alpha 1/2\n",
])
def test_parse_cover_errors(text):
    with pytest.raises(ParseError):
        parse_cover(text)


def test_truth_table_text_format():
    text = write_truth_table(EQ2)
    assert text.splitlines()[0] == "vars x1 x2 y1 y2"
    assert parse_truth_table(text) == EQ2
    with pytest.raises(ParseError):
        parse_truth_table("vars a\n7\n")

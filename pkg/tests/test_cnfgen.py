import pytest

from codewidth.cnfgen import (
    CnfFormula,
    ConstraintBlock,
    GeneratorParams,
    Provenance,
    V,
    VariableTable,
    X,
    Z,
    brute_force_count,
    build_blocked_instance,
    build_nd_instance,
    constraint_to_clauses,
    encode_blocked_pathwidth,
    encode_naive,
    encode_neighborhood_diversity,
    expected_nd,
    formula_size,
    iter_models,
    materialize,
    parse_abstract,
    parse_dimacs,
    size_bound,
    solution_projection,
    write_abstract,
    write_dimacs,
)
from codewidth.core.exceptions import CapExceeded, ParameterMismatch, ParseError, ScopeTooLarge
from codewidth.f2code import F2Matrix, LinearCode, affine_model_count, enumerate_codewords, sample_parity_check
from codewidth.graphwidth import incidence_graph, neighborhood_diversity

# Mark all tests in this file as 'unit'
pytestmark = pytest.mark.unit


def generic(num_vars, clauses):
    table = VariableTable(tuple(V(i) for i in range(1, num_vars + 1)))
    return CnfFormula(table, tuple(tuple(c) for c in clauses))


def pair_block(predicate):
    return ConstraintBlock((V(1), V(2)), predicate=predicate, label="pair")


PAIR_TABLE = VariableTable((V(1), V(2)))


# ============================================================================
# Canonical clauses
# ============================================================================

def test_constraint_to_clauses_examples():
    only_zero = constraint_to_clauses(pair_block(lambda v: v == (0, 0)), PAIR_TABLE)
    assert len(only_zero) == 3 and all(len(c) == 2 for c in only_zero)

    assert constraint_to_clauses(pair_block(lambda v: True), PAIR_TABLE) == []

    even = constraint_to_clauses(pair_block(lambda v: v[0] ^ v[1] == 0), PAIR_TABLE)
    assert sorted(even) == sorted([(1, -2), (-1, 2)])


def test_constraint_scope_cap():
    block = ConstraintBlock(tuple(V(i) for i in range(1, 5)), predicate=lambda v: True)
    table = VariableTable(tuple(V(i) for i in range(1, 5)))
    with pytest.raises(ScopeTooLarge) as excinfo:
        constraint_to_clauses(block, table, cap=3)
    assert excinfo.value.exit_status == 3
    assert "abstract" in excinfo.value.user_message


# ============================================================================
# Formula size and the naive encoding
# ============================================================================

def test_formula_size_examples():
    assert formula_size(generic(2, [(1, 2), (-1,)])) == 3
    assert formula_size(generic(3, [])) == 0


def test_naive_encoding_of_single_parity_check(logger):
    logger.section("test_naive_encoding_of_single_parity_check")
    formula = encode_naive(F2Matrix.from_lists([[1, 1]]))
    logger.response("DIMACS", write_dimacs(formula))
    # equality: 2 x 2, xor of three: 4 x 3, one unit
    assert formula_size(formula) == 17
    assert formula.num_vars == 4
    assert solution_projection(formula) == {(0, 0), (1, 1)}
    assert brute_force_count(formula) == 2


def test_naive_accumulators_are_fixed_in_every_model():
    formula = encode_naive(F2Matrix.from_lists([[1, 1]]))
    table = formula.variables
    z11, z12, x1 = table.index(Z(1, 1)), table.index(Z(1, 2)), table.index(X(1))
    models = list(iter_models(formula))
    assert len(models) == 2
    for model in models:
        assert model[z11 - 1] == model[x1 - 1]
        assert model[z12 - 1] == 0


@pytest.mark.parametrize("seed", range(5))
def test_naive_accumulators_track_prefix_parities(seed):
    matrix = sample_parity_check(2, 4, seed)
    formula = encode_naive(matrix)
    table = formula.variables
    for model in iter_models(formula):
        x = [model[table.index(X(j)) - 1] for j in range(1, 5)]
        for i in (1, 2):
            for j in range(1, 5):
                prefix = sum(matrix.entry(i, t) * x[t - 1] for t in range(1, j + 1)) % 2
                assert model[table.index(Z(i, j)) - 1] == prefix
            assert model[table.index(Z(i, 4)) - 1] == 0


def test_naive_provenance_defaults():
    formula = encode_naive(sample_parity_check(3, 4, 0))
    assert formula.provenance == Provenance("naive", 3, 1, 1, None)
    assert write_dimacs(formula).splitlines()[0] == "c generator naive k=3 b=1 c=1 seed=none"
    recorded = encode_naive(sample_parity_check(2, 4, 0), GeneratorParams(2, 1, seed=7))
    assert recorded.provenance.seed == 7


# ============================================================================
# Projection onto X equals the code
# ============================================================================

ENCODERS = [
    ("naive", lambda A, p: encode_naive(A), (2, 4), GeneratorParams(2, 1)),
    ("blockpw-k1", encode_blocked_pathwidth, (2, 4), GeneratorParams(1, 2)),
    ("blockpw-k2", encode_blocked_pathwidth, (2, 4), GeneratorParams(2, 1)),
    ("nd-k1", encode_neighborhood_diversity, (2, 4), GeneratorParams(1, 2, 2)),
    ("nd-k2", encode_neighborhood_diversity, (2, 2), GeneratorParams(2, 1, 1)),
]


@pytest.mark.parametrize("name,encode,shape,params", ENCODERS, ids=[e[0] for e in ENCODERS])
@pytest.mark.parametrize("seed", range(20))
def test_projection_equals_code(name, encode, shape, params, seed):
    matrix = sample_parity_check(shape[0], shape[1], seed)
    formula = encode(matrix, params)
    assert formula.num_vars <= 24
    code = LinearCode(matrix)
    assert solution_projection(formula) == enumerate_codewords(code)
    # accumulators are functionally determined, so counts agree too
    assert brute_force_count(formula) == affine_model_count(code)


def test_projection_edge_cases():
    formula = generic(2, [(1, 2)])
    assert solution_projection(formula, [V(1)]) == {(0,), (1,)}
    assert solution_projection(formula, []) == {()}
    assert solution_projection(generic(1, [(1,), (-1,)]), []) == set()


def test_oracle_cap():
    formula = generic(5, [(1, 2)])
    with pytest.raises(CapExceeded):
        brute_force_count(formula, cap=4)
    assert len(list(iter_models(formula, cap=5))) == 24


# ============================================================================
# Blocked encoding
# ============================================================================

def test_blocked_parameter_mismatch():
    with pytest.raises(ParameterMismatch):
        encode_blocked_pathwidth(F2Matrix.from_lists([[1, 1, 0]]), GeneratorParams(2, 1))
    with pytest.raises(ParameterMismatch):
        GeneratorParams(0, 1)


@pytest.mark.parametrize("k,b,n", [(1, 1, 3), (1, 2, 4), (2, 1, 4), (2, 2, 3), (3, 1, 5)])
def test_blocked_size_bound(k, b, n):
    params = GeneratorParams(k, b, seed=3)
    formula = encode_blocked_pathwidth(sample_parity_check(k * b, n, 3), params)
    assert formula_size(formula) <= size_bound(params, n)
    assert len(build_blocked_instance(sample_parity_check(k * b, n, 3), params).blocks) == k * n


@pytest.mark.parametrize("seed", range(3))
def test_blocked_clauses_span_their_scope(seed):
    params = GeneratorParams(2, 2, seed=seed)
    instance = build_blocked_instance(sample_parity_check(4, 4, seed), params)
    for block in instance.blocks:
        clauses = constraint_to_clauses(block, instance.variables)
        assert clauses
        assert all(len(clause) == len(block.scope) for clause in clauses)
        assert all(len({abs(lit) for lit in clause}) == len(clause) for clause in clauses)
    # x_j plus two accumulator columns of the block's two rows
    assert {len(block.scope) for block in instance.blocks[2:]} == {5}
    formula = materialize(instance)
    assert {len(clause) for clause in formula.clauses} == {3, 5}


def test_blocked_instance_structure():
    matrix = F2Matrix.from_lists([[1, 0, 1], [0, 1, 1]])
    instance = build_blocked_instance(matrix, GeneratorParams(1, 2))
    assert instance.units == ()
    assert [block.label for block in instance.blocks] == ["R[1]^0", "R[2]^0", "R[3]^0"]
    first, middle, last = instance.blocks
    assert first.scope == (X(1), Z(1, 1), Z(2, 1))
    assert middle.scope == (X(2), Z(1, 1), Z(2, 1), Z(1, 2), Z(2, 2))
    assert all(chain.final for chain in last.chains)
    assert not any(chain.final for chain in middle.chains)


# ============================================================================
# Neighborhood-diversity encoding
# ============================================================================

@pytest.mark.parametrize("k,c", [(1, 2), (1, 3), (2, 1)])
def test_nd_is_independent_of_b(k, c, logger):
    logger.section(f"test_nd_is_independent_of_b k={k} c={c}")
    measured = []
    for b in (1, 2, 3):
        params = GeneratorParams(k, b, c, seed=11)
        formula = encode_neighborhood_diversity(sample_parity_check(k * b, c * k * b, 11), params)
        measured.append(neighborhood_diversity(incidence_graph(formula)))
    logger.info(f"nd per b: {measured}")
    assert len(set(measured)) == 1
    assert measured[0] == expected_nd(GeneratorParams(k, 1, c))
    assert measured[0] <= 3 * k * c * k


def test_expected_nd_values():
    assert expected_nd(GeneratorParams(1, 1, 2)) == 4
    assert expected_nd(GeneratorParams(1, 1, 3)) == 7
    assert expected_nd(GeneratorParams(2, 1, 1)) == 9


def test_nd_parameter_mismatch():
    with pytest.raises(ParameterMismatch):
        build_nd_instance(sample_parity_check(1, 5, 0), GeneratorParams(1, 1, 2))


@pytest.mark.parametrize("k,b,c", [(1, 1, 2), (1, 2, 2), (2, 1, 2), (1, 2, 3)])
def test_nd_clauses_contain_every_code_bit(k, b, c):
    params = GeneratorParams(k, b, c, seed=5)
    formula = encode_neighborhood_diversity(sample_parity_check(k * b, c * k * b, 5), params)
    table = formula.variables
    x_indices = {table.index(var) for var in table.x_variables()}
    assert len(x_indices) == c * k * b
    assert formula.clauses
    for clause in formula.clauses:
        assert x_indices <= {abs(lit) for lit in clause}
    assert all(var.col >= b for var in table.z_variables())
    assert not any(Z(i, 0) in table for i in range(1, k * b + 1))


def test_nd_large_scope_stays_abstract():
    params = GeneratorParams(1, 20, 32, seed=0)
    instance = build_nd_instance(sample_parity_check(20, 640, 0), params)
    assert instance.max_scope() == 640 + 40
    with pytest.raises(ScopeTooLarge):
        materialize(instance)
    assert write_abstract(instance).count("\nconstraint ") == 32


# ============================================================================
# Text formats
# ============================================================================

def test_dimacs_round_trip_keeps_metadata():
    matrix = F2Matrix.from_lists([[1, 1, 0, 0], [0, 0, 1, 1]])
    formula = encode_blocked_pathwidth(matrix, GeneratorParams(1, 2, seed=5))
    parsed = parse_dimacs(write_dimacs(formula))
    assert parsed == formula
    assert parsed.provenance.generator == "blockpw" and parsed.provenance.seed == 5
    assert parsed.matrix == matrix


def test_parse_dimacs_without_comments():
    formula = parse_dimacs("p cnf 3 2\n1 -2 0\n2 3 0\n")
    assert formula.num_vars == 3
    assert formula.clauses == ((1, -2), (2, 3))
    assert formula.provenance is None and formula.matrix is None
    assert formula.variables.x_variables() == ()


@pytest.mark.parametrize("comment", [
    "c variables: 3",
    "c rows 5",
    "c matrix multiplication",
    "c generator by hand",
    "c row of the month",
    "c var names follow",
    "c",
])
def test_parse_dimacs_ignores_free_form_comments(comment):
    formula = parse_dimacs(f"{comment}\np cnf 1 1\n1 0\n")
    assert formula.clauses == ((1,),)
    assert formula.provenance is None and formula.matrix is None


@pytest.mark.parametrize("text,line", [
    ("c row 0101\np cnf 1 1\n1 0\n", 1),
    ("c matrix 1 3\nc row 01\np cnf 1 1\n1 0\n", 2),
    ("c generator naive k=x b=1 c=1 seed=none\np cnf 1 1\n1 0\n", 1),
    ("c generator sat2002 k=1 b=1 c=1 seed=none\np cnf 1 1\n1 0\n", 1),
    ("c var 1 = q 7\np cnf 1 1\n1 0\n", 1),
])
def test_parse_dimacs_rejects_malformed_metadata(text, line):
    with pytest.raises(ParseError) as excinfo:
        parse_dimacs(text)
    assert excinfo.value.line_number == line


@pytest.mark.parametrize("text,line", [
    ("1 2 0\n", 1),
    ("p cnf 2 1\n1 3 0\n", 2),
    ("p cnf 2 2\n1 2 0\n", 2),
    ("p cnf 2 1\n1 2\n", 2),
    ("p cnf 2 1\n1 x 0\n", 2),
    ("p cnf 2 1\n1 1 0\n", 2),
])
def test_parse_dimacs_errors_report_line(text, line):
    with pytest.raises(ParseError) as excinfo:
        parse_dimacs(text)
    assert excinfo.value.line_number == line
    assert excinfo.value.exit_status == 2


def test_abstract_round_trip():
    matrix = sample_parity_check(2, 4, 2)
    instance = build_nd_instance(matrix, GeneratorParams(1, 2, 2, seed=2))
    parsed = parse_abstract(write_abstract(instance))
    assert parsed.variables == instance.variables
    assert parsed.provenance == instance.provenance
    assert parsed.matrix == matrix
    assert materialize(parsed).clauses == materialize(instance).clauses

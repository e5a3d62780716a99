import random

import pytest

from codewidth.cnfgen import (
    CnfFormula,
    GeneratorParams,
    V,
    VariableTable,
    brute_force_count,
    encode_blocked_pathwidth,
    encode_naive,
    encode_neighborhood_diversity,
    iter_models,
)
from codewidth.common.truthtable import TruthTable, full_mask, position_mask
from codewidth.compiler import (
    COLUMNS,
    ExperimentGrid,
    compile_dpll,
    parse_grid,
    run_cell,
    scaling_experiment,
)
from codewidth.compiler.experiment import Cell
from codewidth.core.exceptions import BudgetExceeded, ParseError, ValidationError
from codewidth.dnnf import (
    certify_deterministic,
    check_decomposable,
    check_deterministic,
    circuit_truth_table,
    count_models,
    evaluate,
)
from codewidth.f2code import LinearCode, affine_model_count, sample_parity_check

# Mark all tests in this file as 'unit'
pytestmark = pytest.mark.unit


def generic(num_vars, clauses):
    table = VariableTable(tuple(V(i) for i in range(1, num_vars + 1)))
    return CnfFormula(table, tuple(tuple(c) for c in clauses))


def random_cnf(seed, num_vars=6, num_clauses=8):
    rng = random.Random(seed)
    clauses = []
    for _ in range(num_clauses):
        variables = rng.sample(range(1, num_vars + 1), rng.randint(1, 3))
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in variables))
    return generic(num_vars, clauses)


# ============================================================================
# Compilation
# ============================================================================

def test_compile_examples():
    circuit, stats = compile_dpll(generic(2, [(1, 2)]))
    assert count_models(circuit) == 3
    assert stats.decisions >= 1

    contradiction, _ = compile_dpll(generic(1, [(1,), (-1,)]))
    assert contradiction.node_count == 1 and contradiction.nodes[0].is_false
    assert count_models(contradiction, over=[1]) == 0

    empty, _ = compile_dpll(generic(3, []))
    assert count_models(empty, over=[1, 2, 3]) == 8


@pytest.mark.parametrize("heuristic", ["fixed", "max-occurrence"])
@pytest.mark.parametrize("seed", range(20))
def test_compiled_random_cnf_is_a_decision_dnnf(seed, heuristic):
    formula = random_cnf(seed)
    circuit, _ = compile_dpll(formula, heuristic=heuristic)
    assert check_decomposable(circuit) == []
    assert certify_deterministic(circuit) == []
    assert check_deterministic(circuit) == []
    assert count_models(circuit, over=range(1, 7)) == brute_force_count(formula)


@pytest.mark.parametrize("seed", range(20))
def test_counting_consistency_on_generated_instances(seed):
    k, b = (1, 2) if seed % 2 else (2, 1)
    matrix = sample_parity_check(k * b, 4, seed)
    if seed % 3 == 0:
        formula = encode_naive(matrix)
    elif seed % 3 == 1:
        formula = encode_blocked_pathwidth(matrix, GeneratorParams(k, b, seed=seed))
    else:
        matrix = sample_parity_check(2, 4, seed)
        formula = encode_neighborhood_diversity(matrix, GeneratorParams(1, 2, 2, seed=seed))
    circuit, _ = compile_dpll(formula)
    models = count_models(circuit, over=range(1, formula.num_vars + 1))
    assert models == affine_model_count(LinearCode(matrix)) == brute_force_count(formula)


def cnf_truth_table(formula):
    variables = tuple(range(1, formula.num_vars + 1))
    everything = full_mask(len(variables))
    falsified = 0
    for clause in formula.clauses:
        mask = everything
        for lit in clause:
            ones = position_mask(len(variables), abs(lit) - 1)
            mask &= (everything & ~ones) if lit > 0 else ones
        falsified |= mask
    return TruthTable(variables, everything & ~falsified)


FUNCTION_CASES = [
    ("blockpw", lambda seed: encode_blocked_pathwidth(sample_parity_check(2, 6, seed),
                                                      GeneratorParams(2, 1, seed=seed))),
    ("naive", lambda seed: encode_naive(sample_parity_check(2, 4, seed))),
]


@pytest.mark.parametrize("name,build", FUNCTION_CASES, ids=[case[0] for case in FUNCTION_CASES])
@pytest.mark.parametrize("heuristic", ["fixed", "max-occurrence"])
@pytest.mark.parametrize("cache", [True, False])
@pytest.mark.parametrize("seed", range(3))
def test_compiled_circuit_computes_the_formula(name, build, heuristic, cache, seed):
    formula = build(seed)
    circuit, _ = compile_dpll(formula, heuristic=heuristic, cache=cache)
    expected = cnf_truth_table(formula)
    assert circuit_truth_table(circuit, variables=expected.variables) == expected

    for model in iter_models(formula):
        assert evaluate(circuit, dict(enumerate(model, start=1))) == 1
    rng = random.Random(seed)
    for _ in range(50):
        assignment = {v: rng.randint(0, 1) for v in expected.variables}
        assert evaluate(circuit, assignment) == expected.value(assignment)


def test_cache_does_not_increase_size():
    formula = encode_blocked_pathwidth(sample_parity_check(2, 6, 3), GeneratorParams(1, 2, seed=3))
    cached, with_cache = compile_dpll(formula, cache=True)
    plain, without_cache = compile_dpll(formula, cache=False)
    assert without_cache.cache_hits == 0
    assert without_cache.edges >= with_cache.edges
    assert count_models(cached, over=range(1, formula.num_vars + 1)) == \
        count_models(plain, over=range(1, formula.num_vars + 1))


def test_budget_exceeded():
    formula = encode_blocked_pathwidth(sample_parity_check(2, 4, 5), GeneratorParams(1, 2, seed=5))
    with pytest.raises(BudgetExceeded) as excinfo:
        compile_dpll(formula, budget=3)
    assert excinfo.value.exit_status == 3


def test_unknown_heuristic():
    with pytest.raises(ValidationError):
        compile_dpll(generic(1, [(1,)]), heuristic="random")


# ============================================================================
# Experiment grids
# ============================================================================

GRID = """
[grid]
mode = ["blockpw"]
k = [1]
b = [2]
n = [4, 6, 8]
seed = [5]
"""


def test_parse_grid():
    grid = parse_grid(GRID)
    assert grid.modes == ("blockpw",)
    assert grid.ns == (4, 6, 8) and grid.cs == (1,) and grid.seeds == (5,)
    assert [cell.n for cell in grid.cells()] == [4, 6, 8]

    nd = parse_grid('[grid]\nmode = "nd"\nk = 1\nb = [1, 2]\nc = [2]\n')
    assert [(cell.n, cell.c) for cell in nd.cells()] == [(2, 2), (4, 2)]


@pytest.mark.parametrize("text,error", [
    ("not toml [", ParseError),
    ("[other]\nk = 1\n", ParseError),
    ('[grid]\nmode = "dense"\nk = 1\nb = 1\nn = 2\n', ValidationError),
    ('[grid]\nmode = "blockpw"\nk = 1\nb = 1\n', ValidationError),
    ('[grid]\nmode = "blockpw"\nk = "one"\nb = 1\nn = 2\n', ValidationError),
    ('[grid]\nmode = "blockpw"\nk = 1\nb = 1\nn = 2\nbudget = 0\n', ValidationError),
])
def test_parse_grid_errors(text, error):
    with pytest.raises(error):
        parse_grid(text)


def test_scaling_experiment_matches_oracle(logger):
    logger.section("test_scaling_experiment_matches_oracle")
    report = scaling_experiment(parse_grid(GRID), workers=2)
    logger.response("report", report.to_text())
    assert len(report.rows) == 3
    assert report.all_match
    assert [row.cell.n for row in report.rows] == [4, 6, 8]
    assert all(row.values["modpw"] == "1(validated)" for row in report.rows)
    assert [entry[2] for entry in report.growth()] == [4, 6, 8]


def test_scaling_experiment_is_reproducible():
    grid = parse_grid(GRID)
    first = scaling_experiment(grid, workers=3)
    second = scaling_experiment(grid, workers=1)
    assert first.body() == second.body()
    assert first.to_text(include_timing=False) == second.body()
    assert first.to_csv().splitlines()[0].split(",")[:len(COLUMNS)] == list(COLUMNS)


@pytest.mark.slow
def test_full_scaling_grid_matches_linear_algebra(logger):
    logger.section("test_full_scaling_grid_matches_linear_algebra")
    grid = ExperimentGrid(modes=("naive", "blockpw"), ks=(1, 2), bs=(1,), ns=(4, 6, 8, 10),
                          seeds=(0, 1))
    report = scaling_experiment(grid)
    logger.response("report", report.to_text(include_timing=False))
    assert len(report.rows) == 2 * 2 * 4 * 2
    assert all(row.ok for row in report.rows)
    assert all(row.values["match"] == "MATCH" for row in report.rows)
    assert report.all_match


def test_over_budget_cell_is_isolated(mocker):
    real_compile = compile_dpll

    def compile_or_fail(formula, heuristic="fixed", budget=None):
        if len(formula.variables.x_variables()) == 6:
            raise BudgetExceeded(1)
        return real_compile(formula, heuristic=heuristic, budget=budget)

    mocker.patch('codewidth.compiler.experiment.compile_dpll', side_effect=compile_or_fail)
    report = scaling_experiment(parse_grid(GRID), workers=2)
    assert [row.status for row in report.rows] == ["ok", "BudgetExceeded", "ok"]
    assert report.rows[0].values["match"] == "MATCH"
    assert report.rows[2].values["match"] == "MATCH"
    assert not report.all_match
    assert "BudgetExceeded" in report.body()


def test_crashing_cell_is_recorded(mocker):
    real_run = run_cell

    def run_or_crash(cell, budget=None, heuristic="fixed"):
        if cell.n == 4:
            raise RuntimeError("boom")
        return real_run(cell, budget, heuristic)

    mocker.patch('codewidth.compiler.experiment.run_cell', side_effect=run_or_crash)
    report = scaling_experiment(parse_grid(GRID), workers=2)
    assert report.rows[0].status == "error:RuntimeError"
    assert report.rows[1].ok and report.rows[2].ok


def test_run_cell_reports_parameter_errors():
    row = run_cell(Cell("blockpw", 1, 2, 1, 1, 0))
    assert row.status == "ParameterMismatch"
    assert row.column("models") == "-"


def test_grid_rejects_unknown_mode():
    with pytest.raises(ValidationError):
        ExperimentGrid(modes=("dense",), ks=(1,), bs=(1,), ns=(2,))

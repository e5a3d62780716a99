"""
Subcommand handlers. Each takes the parsed arguments, writes its artifacts
atomically and returns the exit status: 0 when every requested check
passed, 1 when one failed. Errors propagate as CodeWidthException.
"""

import logging
import os
import sys

from config import Config
from codewidth.cnfgen import (
    GeneratorParams,
    brute_force_count,
    build_instance,
    expected_nd,
    formula_size,
    materialize,
    parse_dimacs,
    write_abstract,
    write_dimacs,
)
from codewidth.common.truthtable import parse_truth_table
from codewidth.common.utils import atomic_write_text, parse_fraction, read_text
from codewidth.compiler import compile_dpll, load_grid, scaling_experiment
from codewidth.core.exceptions import (
    NotDeterministic,
    ParameterMismatch,
    TooLarge,
    ValidationError,
)
from codewidth.dnnf import (
    certify_deterministic,
    check_decomposable,
    count_models,
    forget,
    parse_nnf,
    require_deterministic,
    write_nnf,
)
from codewidth.f2code import (
    LinearCode,
    affine_model_count,
    code_truth_table,
    parse_matrix,
    sample_parity_check,
)
from codewidth.graphwidth import (
    analyze_widths,
    claim_decomposition_for,
    incidence_graph,
    modular_contraction,
    vertex_labels,
    write_decomposition,
    write_graph,
)
from codewidth.rectcover import min_cover_bruteforce, parse_cover, verify_cover

logger = logging.getLogger(__name__)


def _require_seed(seed, what: str):
    if seed is None:
        raise ValidationError(
            f"--seed is required to {what}", field="seed",
            user_message=f"--seed is required to {what}; randomized runs must be reproducible.")


def _distinct_output(source: str, target: str):
    if os.path.abspath(source) == os.path.abspath(target):
        raise ValidationError(
            f"Output {target} would overwrite the input", field="output",
            user_message="Choose an output path different from the input file.")


def _write(path: str, text: str, summary: str):
    atomic_write_text(path, text)
    print(f"wrote {path}: {summary}")


# ============================================================================
# generate
# ============================================================================

def _code_length(args) -> int:
    if args.mode == "nd":
        length = args.c * args.k * args.b
        if args.n is not None and args.n != length:
            raise ParameterMismatch(f"nd mode needs n = c*k*b = {length}, got -n {args.n}")
        return length
    if args.n is None:
        raise ParameterMismatch(f"-n is required for {args.mode} mode unless --matrix is given")
    return args.n


def cmd_generate(args) -> int:
    if args.output is None and args.abstract is None:
        raise ValidationError(
            "generate needs -o and/or --abstract", field="output",
            user_message="Name an output: -o FILE.cnf and/or --abstract FILE.")
    if args.matrix:
        matrix = parse_matrix(read_text(args.matrix))
    else:
        _require_seed(args.seed, "sample the parity-check matrix")
        matrix = sample_parity_check(args.k * args.b, _code_length(args), args.seed)

    if args.mode == "naive" and args.matrix:
        params = None
    else:
        params = GeneratorParams(args.k, args.b, args.c if args.mode == "nd" else 1, args.seed)
    instance = build_instance(args.mode, matrix, params)
    logger.info(f"Built {args.mode} instance: {len(instance.blocks)} constraints, "
                f"max scope {instance.max_scope()}")

    # the abstract file is written even when materialization is refused
    if args.abstract:
        _write(args.abstract, write_abstract(instance),
               f"{len(instance.blocks)} constraints, max scope {instance.max_scope()}")
    if args.output:
        formula = materialize(instance)
        _write(args.output, write_dimacs(formula),
               f"{formula.num_vars} vars, {formula.num_clauses} clauses, size {formula_size(formula)}")
    return 0


# ============================================================================
# analyze
# ============================================================================

def cmd_analyze(args) -> int:
    formula = parse_dimacs(read_text(args.input))
    analysis = analyze_widths(formula, exact=args.exact)
    ok = analysis.claim_holds is not False

    print(f"formula: {formula.num_vars} vars, {formula.num_clauses} clauses, size {formula_size(formula)}")
    print(f"incidence graph: {analysis.vertices} vertices, {analysis.edges} edges")
    print(f"neighborhood diversity: {analysis.neighborhood_diversity}")
    print(f"contracted vertices: {analysis.contracted_vertices}")
    provenance = formula.provenance
    if provenance is not None and provenance.generator == "nd":
        expected = expected_nd(provenance.params)
        match = expected == analysis.neighborhood_diversity
        ok = ok and match
        print(f"expected neighborhood diversity: {expected} ({'match' if match else 'MISMATCH'})")
    print(f"modular pathwidth bound: {analysis.claim_summary()}")
    exact = "n/a" if analysis.modular_pathwidth is None else analysis.modular_pathwidth
    print(f"exact modular pathwidth: {exact}")

    graph = None
    if args.graph:
        _distinct_output(args.input, args.graph)
        graph = incidence_graph(formula)
        _write(args.graph, write_graph(graph),
               f"{graph.number_of_nodes()} vertices, {graph.number_of_edges()} edges")
    if args.decomposition:
        _distinct_output(args.input, args.decomposition)
        contracted = modular_contraction(graph if graph is not None else incidence_graph(formula))
        decomposition = claim_decomposition_for(formula)
        _write(args.decomposition, write_decomposition(decomposition, vertex_labels(contracted)),
               f"{len(decomposition)} bags, width {decomposition.width}")
    return 0 if ok else 1


# ============================================================================
# count / compile
# ============================================================================

def _oracle_count(formula):
    if formula.matrix is not None:
        return affine_model_count(LinearCode(formula.matrix))
    if formula.num_vars <= Config.BRUTE_FORCE_VAR_CAP:
        return brute_force_count(formula)
    logger.warning(f"No oracle: no matrix metadata and {formula.num_vars} variables "
                   f"exceed the brute-force cap")
    return None


def cmd_count(args) -> int:
    formula = parse_dimacs(read_text(args.input))
    circuit, stats = compile_dpll(formula, heuristic=args.heuristic, budget=args.budget)
    models = count_models(circuit, over=range(1, formula.num_vars + 1))
    oracle = _oracle_count(formula)
    logger.info(f"Counted {models} models ({stats.describe()})")
    if oracle is None:
        print(f"models={models} oracle=n/a")
        return 0
    match = models == oracle
    print(f"models={models} oracle={oracle} {'MATCH' if match else 'MISMATCH'}")
    return 0 if match else 1


def cmd_compile(args) -> int:
    _distinct_output(args.input, args.output)
    formula = parse_dimacs(read_text(args.input))
    circuit, stats = compile_dpll(formula, heuristic=args.heuristic, cache=args.cache,
                                  budget=args.budget)
    _write(args.output, write_nnf(circuit), stats.describe())
    return 0


# ============================================================================
# check / forget
# ============================================================================

def _node_list(nodes) -> str:
    shown = ", ".join(str(node) for node in nodes[:10])
    return shown + (", ..." if len(nodes) > 10 else "")


def cmd_check(args) -> int:
    circuit = parse_nnf(read_text(args.input))
    print(f"circuit: {circuit.node_count} nodes, {circuit.edge_count} edges, "
          f"{len(circuit.variables())} variables")
    ok = True

    violations = check_decomposable(circuit)
    if violations:
        ok = False
        print(f"decomposable: no (AND nodes {_node_list(violations)})")
    else:
        print("decomposable: yes")

    uncertified = certify_deterministic(circuit)
    if args.deterministic:
        try:
            require_deterministic(circuit)
            print("deterministic: yes")
        except NotDeterministic as e:
            ok = False
            print(f"deterministic: no ({e.user_message})")
    elif uncertified:
        print(f"deterministic: not certified (OR nodes {_node_list(uncertified)})")
    else:
        print("deterministic: certified")
    return 0 if ok else 1


def _parse_var_list(text: str):
    try:
        variables = [int(token) for token in text.replace(",", " ").split()]
    except ValueError:
        raise ValidationError(f"Invalid variable list {text!r}", field="vars",
                              user_message="--vars takes comma-separated positive integers.")
    if any(v < 1 for v in variables):
        raise ValidationError(f"Invalid variable list {text!r}", field="vars",
                              user_message="--vars takes comma-separated positive integers.")
    return variables


def cmd_forget(args) -> int:
    _distinct_output(args.input, args.output)
    circuit = parse_nnf(read_text(args.input))
    if args.vars is not None:
        variables = _parse_var_list(args.vars)
    else:
        variables = [v for v in circuit.variables() if v > args.keep]
    result = forget(circuit, variables)
    _write(args.output, write_nnf(result),
           f"forgot {len(set(variables))} variables, {circuit.edge_count} -> {result.edge_count} edges")
    return 0


# ============================================================================
# rectcover
# ============================================================================

def _load_function(args):
    if args.truth_table:
        return parse_truth_table(read_text(args.truth_table))
    if args.matrix:
        matrix = parse_matrix(read_text(args.matrix))
    else:
        _require_seed(args.seed, "sample the code")
        m, n = args.random
        matrix = sample_parity_check(m, n, args.seed)
    if matrix.num_cols > Config.TRUTH_TABLE_VAR_CAP:
        raise TooLarge(f"Code length {matrix.num_cols} exceeds the truth-table cap "
                       f"{Config.TRUTH_TABLE_VAR_CAP}",
                       limit=Config.TRUTH_TABLE_VAR_CAP, requested=matrix.num_cols)
    return code_truth_table(LinearCode(matrix))


def cmd_rectcover(args) -> int:
    f = _load_function(args)
    if args.verify:
        cover, file_beta = parse_cover(read_text(args.verify))
        beta = file_beta if args.beta is None else parse_fraction(args.beta)
        report = verify_cover(f, cover, beta)
        print(f"cover of {len(cover)} rectangles at beta {beta}: {report.describe()}")
        return 0 if report.ok else 1

    beta = parse_fraction(Config.DEFAULT_BETA if args.beta is None else args.beta)
    size = min_cover_bruteforce(f, beta=beta)
    print(f"minimum cover: {size} (beta {beta}, {f.num_vars} variables)")
    return 0


# ============================================================================
# experiment
# ============================================================================

def cmd_experiment(args) -> int:
    grid = load_grid(args.grid)
    report = scaling_experiment(grid, workers=args.workers)
    text = report.to_text(include_timing=args.timing)
    if args.output:
        _distinct_output(args.grid, args.output)
        _write(args.output, text, f"{len(report.rows)} cells")
    else:
        sys.stdout.write(text)
    if args.csv:
        _distinct_output(args.grid, args.csv)
        _write(args.csv, report.to_csv(), f"{len(report.rows)} rows")
    if not report.all_match:
        failed = [row for row in report.rows if not row.ok or row.values.get("match") != "MATCH"]
        logger.warning(f"{len(failed)} of {len(report.rows)} cells did not match their oracle")
        return 1
    return 0

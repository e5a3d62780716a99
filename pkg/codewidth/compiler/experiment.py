"""
Scaling experiments: generate, analyze, compile and verify every cell of a
parameter grid, then tabulate circuit size against n.

Grid files are TOML:

    [grid]
    mode = ["blockpw"]
    k = [1, 2]
    b = [2]
    n = [4, 6, 8]
    c = [1]
    seed = [5]
    budget = 200000
    heuristic = "fixed"

naive and blockpw cells range over n (c is fixed to 1); nd cells range over
c and take n = c*k*b.
"""

import csv
import io
import itertools
import logging
import math
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from config import Config
from codewidth.cnfgen import GENERATORS, GeneratorParams, build_instance, formula_size, materialize
from codewidth.common.utils import default_workers
from codewidth.core.exceptions import CodeWidthException, ParseError, ValidationError
from codewidth.dnnf import check_decomposable, count_models, require_deterministic
from codewidth.f2code import LinearCode, affine_model_count, sample_parity_check
from codewidth.graphwidth import analyze_widths
from .dpll import HEURISTICS, compile_dpll

logger = logging.getLogger(__name__)

COLUMNS = ("mode", "k", "b", "n", "c", "seed", "status", "vars", "clauses", "size",
           "nd", "modpw", "nodes", "edges", "models", "oracle", "match")


@dataclass(frozen=True)
class Cell:
    mode: str
    k: int
    b: int
    n: int
    c: int
    seed: int

    @property
    def params(self) -> GeneratorParams:
        return GeneratorParams(self.k, self.b, self.c, self.seed)

    def key(self) -> Tuple:
        return (self.mode, self.k, self.b, self.n, self.c, self.seed)


@dataclass(frozen=True)
class ExperimentGrid:
    """Cartesian product of generator parameters plus compile settings."""

    modes: Tuple[str, ...]
    ks: Tuple[int, ...]
    bs: Tuple[int, ...]
    ns: Tuple[int, ...] = ()
    cs: Tuple[int, ...] = (1,)
    seeds: Tuple[int, ...] = (0,)
    budget: int = None
    heuristic: str = "fixed"

    def __post_init__(self):
        unknown = [mode for mode in self.modes if mode not in GENERATORS]
        if unknown:
            raise ValidationError(f"Unknown generator modes {unknown}", field="mode")
        if self.heuristic not in HEURISTICS:
            raise ValidationError(f"Unknown heuristic {self.heuristic!r}", field="heuristic")
        if any(mode != "nd" for mode in self.modes) and not self.ns:
            raise ValidationError("naive and blockpw cells need at least one n", field="n")

    def cells(self) -> List[Cell]:
        """Cells in grid order: mode, k, b, then n (or c for nd), then seed."""
        cells = []
        for mode, k, b in itertools.product(self.modes, self.ks, self.bs):
            if mode == "nd":
                for c, seed in itertools.product(self.cs, self.seeds):
                    cells.append(Cell(mode, k, b, c * k * b, c, seed))
            else:
                for n, seed in itertools.product(self.ns, self.seeds):
                    cells.append(Cell(mode, k, b, n, 1, seed))
        return cells


def _int_list(table: dict, key: str, default=None) -> Tuple[int, ...]:
    value = table.get(key, default)
    if value is None:
        return ()
    values = value if isinstance(value, list) else [value]
    if not values or not all(isinstance(v, int) and not isinstance(v, bool) for v in values):
        raise ValidationError(f"grid.{key} must be an integer or a list of integers", field=key)
    return tuple(values)


def parse_grid(text: str) -> ExperimentGrid:
    """
    Raises:
        ParseError: If the text is not TOML or lacks a [grid] table.
        ValidationError: On ill-typed or unknown values.
    """
    try:
        document = tomllib.loads(text)
    except tomllib.TOMLDecodeError as e:
        raise ParseError(f"grid file is not valid TOML: {e}")
    table = document.get("grid")
    if not isinstance(table, dict):
        raise ParseError("grid file needs a [grid] table")
    modes = table.get("mode", [])
    modes = tuple(modes if isinstance(modes, list) else [modes])
    budget = table.get("budget")
    if budget is not None and (not isinstance(budget, int) or budget < 1):
        raise ValidationError("grid.budget must be a positive integer", field="budget")
    return ExperimentGrid(
        modes=modes,
        ks=_int_list(table, "k"),
        bs=_int_list(table, "b"),
        ns=_int_list(table, "n"),
        cs=_int_list(table, "c", [1]),
        seeds=_int_list(table, "seed", [0]),
        budget=budget,
        heuristic=table.get("heuristic", "fixed"),
    )


def load_grid(path) -> ExperimentGrid:
    with open(path, "rb") as f:
        data = f.read()
    try:
        return parse_grid(data.decode("utf-8"))
    except UnicodeDecodeError:
        raise ParseError(f"grid file {path} is not UTF-8 text")


@dataclass
class Row:
    cell: Cell
    status: str = "ok"
    values: Dict[str, object] = field(default_factory=dict)
    wall_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status == "ok"

    def column(self, name: str) -> str:
        if name in ("mode", "k", "b", "n", "c", "seed"):
            return str(getattr(self.cell, name))
        if name == "status":
            return self.status
        return str(self.values.get(name, "-"))


def run_cell(cell: Cell, budget: int = None, heuristic: str = "fixed") -> Row:
    """Generates, analyzes, compiles and verifies one cell; errors become the row status."""
    row = Row(cell)
    try:
        matrix = sample_parity_check(cell.k * cell.b, cell.n, cell.seed)
        formula = materialize(build_instance(cell.mode, matrix, cell.params))
        widths = analyze_widths(formula, exact=False)
        row.values.update(vars=formula.num_vars, clauses=formula.num_clauses,
                          size=formula_size(formula), nd=widths.neighborhood_diversity,
                          modpw=widths.claim_summary().replace(" ", ""))
        circuit, stats = compile_dpll(formula, heuristic=heuristic, budget=budget)
        row.wall_ms = stats.wall_ms
        row.values.update(nodes=stats.nodes, edges=stats.edges)
        if check_decomposable(circuit):
            row.status = "NotDecomposable"
            return row
        require_deterministic(circuit)
        models = count_models(circuit, over=range(1, formula.num_vars + 1))
        oracle = affine_model_count(LinearCode(matrix))
        row.values.update(models=models, oracle=oracle, match="MATCH" if models == oracle else "MISMATCH")
        logger.info(f"Cell {cell.key()}: edges={stats.edges} models={models} oracle={oracle}")
    except CodeWidthException as e:
        row.status = type(e).__name__
        logger.warning(f"Cell {cell.key()} failed: [{e.error_code}] {e.message}")
    return row


@dataclass
class Report:
    """Rows in grid order; the body is reproducible, timing is kept apart."""

    rows: List[Row]
    schema_version: int = Config.REPORT_SCHEMA_VERSION

    @property
    def all_match(self) -> bool:
        return all(row.ok and row.values.get("match") == "MATCH" for row in self.rows)

    def growth(self) -> List[Tuple[str, int, int, int, int, int]]:
        """Per (mode, k): n, edges, and milli-log2 of both, for log-log inspection."""
        table = []
        for row in self.rows:
            edges = row.values.get("edges")
            if not row.ok or not edges:
                continue
            table.append((row.cell.mode, row.cell.k, row.cell.n, edges,
                          round(1000 * math.log2(row.cell.n)), round(1000 * math.log2(edges))))
        return sorted(table, key=lambda entry: entry[:3])

    def body(self) -> str:
        lines = ["# codewidth experiment report", f"schema {self.schema_version}",
                 "columns " + " ".join(COLUMNS)]
        for row in self.rows:
            lines.append("row " + " ".join(row.column(name) for name in COLUMNS))
        lines.append("# growth: mode k n edges mlog2_n mlog2_edges")
        for mode, k, n, edges, log_n, log_edges in self.growth():
            lines.append(f"growth {mode} {k} {n} {edges} {log_n} {log_edges}")
        return "\n".join(lines) + "\n"

    def timing(self) -> str:
        lines = ["# timing: mode k b n c seed wall_ms"]
        for row in self.rows:
            lines.append("wall_ms " + " ".join(str(v) for v in row.cell.key()) + f" {row.wall_ms:.1f}")
        return "\n".join(lines) + "\n"

    def to_text(self, include_timing: bool = True) -> str:
        return self.body() + (self.timing() if include_timing else "")

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(COLUMNS + ("wall_ms",))
        for row in self.rows:
            writer.writerow([row.column(name) for name in COLUMNS] + [f"{row.wall_ms:.1f}"])
        return buffer.getvalue()


def scaling_experiment(grid: ExperimentGrid, workers: int = None) -> Report:
    """
    Runs every cell on a thread pool and assembles the report in grid order.

    A failing cell is recorded in its row's status; the other cells complete.
    """
    cells = grid.cells()
    rows: List[Optional[Row]] = [None] * len(cells)
    workers = workers or default_workers()
    logger.info(f"Running {len(cells)} experiment cells on {workers} workers")

    with ThreadPoolExecutor(max_workers=workers) as executor:
        future_to_position = {
            executor.submit(run_cell, cell, grid.budget, grid.heuristic): position
            for position, cell in enumerate(cells)
        }
        for future in as_completed(future_to_position):
            position = future_to_position[future]
            try:
                rows[position] = future.result()
            except Exception as e:
                logger.warning(f"Cell {cells[position].key()} crashed: {e}")
                rows[position] = Row(cells[position], status=f"error:{type(e).__name__}")

    report = Report(rows)
    logger.info(f"Experiment finished; all counts match: {report.all_match}")
    return report

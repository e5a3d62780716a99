"""Width measurements of one formula, shared by the analyze command and the experiment driver."""

import logging
from dataclasses import dataclass
from typing import Optional

from config import Config
from codewidth.cnfgen import CnfFormula
from codewidth.core.exceptions import ValidationError
from .decomposition import DecompositionReport, claim_decomposition_for, validate_path_decomposition
from .graph import incidence_graph
from .modular import modular_contraction
from .pathwidth import exact_pathwidth

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WidthAnalysis:
    vertices: int
    edges: int
    neighborhood_diversity: int
    contracted_vertices: int
    claim: Optional[DecompositionReport] = None
    claim_bound: Optional[int] = None
    modular_pathwidth: Optional[int] = None

    @property
    def claim_holds(self) -> Optional[bool]:
        if self.claim is None:
            return None
        return self.claim.valid and self.claim.width <= self.claim_bound

    def claim_summary(self) -> str:
        if self.claim is None:
            return "n/a"
        status = "validated" if self.claim_holds else f"FAILED ({self.claim.describe()})"
        return f"{self.claim_bound} ({status})"


def analyze_widths(formula: CnfFormula, exact: bool = True) -> WidthAnalysis:
    """
    Incidence-graph size, neighborhood diversity and the contracted graph.

    Blocked encodings also get their claim decomposition validated against
    the bound 2k - 1; with `exact`, contracted graphs within the pathwidth
    cap get their exact modular pathwidth.
    """
    graph = incidence_graph(formula)
    contracted = modular_contraction(graph)
    claim = None
    bound = None
    provenance = formula.provenance
    if provenance is not None and provenance.generator == "blockpw":
        try:
            claim = validate_path_decomposition(contracted, claim_decomposition_for(formula))
            bound = 2 * provenance.k - 1
        except ValidationError as e:
            logger.warning(f"Blocked path decomposition not applicable: {e.message}")
    pathwidth = None
    if exact and contracted.number_of_nodes() <= Config.PATHWIDTH_VERTEX_CAP:
        pathwidth = exact_pathwidth(contracted)
    analysis = WidthAnalysis(
        vertices=graph.number_of_nodes(),
        edges=graph.number_of_edges(),
        neighborhood_diversity=contracted.number_of_nodes(),
        contracted_vertices=contracted.number_of_nodes(),
        claim=claim,
        claim_bound=bound,
        modular_pathwidth=pathwidth,
    )
    logger.info(f"Widths: nd={analysis.neighborhood_diversity}, claim={analysis.claim_summary()}")
    return analysis

"""Incidence graphs, neighborhood types, modular contraction and path decompositions."""

from .graph import incidence_graph, write_graph, parse_graph
from .modular import (
    NeighborhoodPartition,
    neighborhood_partition,
    neighborhood_diversity,
    modular_contraction,
    is_isomorphic,
)
from .pathwidth import exact_pathwidth
from .decomposition import (
    PathDecomposition,
    DecompositionReport,
    validate_path_decomposition,
    build_claim_decomposition,
    claim_graph,
    claim_decomposition_for,
    write_decomposition,
    parse_decomposition,
    labels_to_vertices,
    vertex_labels,
)
from .analysis import WidthAnalysis, analyze_widths

__all__ = [
    'incidence_graph',
    'write_graph',
    'parse_graph',
    'NeighborhoodPartition',
    'neighborhood_partition',
    'neighborhood_diversity',
    'modular_contraction',
    'is_isomorphic',
    'exact_pathwidth',
    'PathDecomposition',
    'DecompositionReport',
    'validate_path_decomposition',
    'build_claim_decomposition',
    'claim_graph',
    'claim_decomposition_for',
    'write_decomposition',
    'parse_decomposition',
    'labels_to_vertices',
    'vertex_labels',
    'WidthAnalysis',
    'analyze_widths',
]

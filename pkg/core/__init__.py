"""Graphs, colorings and their file formats"""

from .coloring import (
    UNCOLORED,
    AcyclicityReport,
    EdgeColoring,
    PathQuery,
    candidate_colors,
    exists_alternating_path,
    exists_critical_path,
    free_colors,
    is_acyclic_so_far,
    is_proper,
    maximal_dichromatic_path,
    missing_edge_w_set,
    properness_violation,
    upsilon,
    used_colors,
    valid_colors,
    verify_acyclic,
    w_set,
)
from .coloring_io import parse_coloring, write_coloring
from .families import Families
from .graph import Graph, GraphClassLabel, Subgraph
from .graph_io import GraphFormat, iter_graph6, parse_edge_list, parse_graph, parse_graph6, write_edge_list, write_graph6
from .models import IndexResult, MinimalityCertificate, SolveResult, SolveStatus

__all__ = [
    "UNCOLORED",
    "AcyclicityReport",
    "EdgeColoring",
    "PathQuery",
    "candidate_colors",
    "exists_alternating_path",
    "exists_critical_path",
    "free_colors",
    "is_acyclic_so_far",
    "is_proper",
    "maximal_dichromatic_path",
    "missing_edge_w_set",
    "properness_violation",
    "upsilon",
    "used_colors",
    "valid_colors",
    "verify_acyclic",
    "w_set",
    "parse_coloring",
    "write_coloring",
    "Families",
    "Graph",
    "GraphClassLabel",
    "Subgraph",
    "GraphFormat",
    "iter_graph6",
    "parse_edge_list",
    "parse_graph",
    "parse_graph6",
    "write_edge_list",
    "write_graph6",
    "IndexResult",
    "MinimalityCertificate",
    "SolveResult",
    "SolveStatus",
]

"""Primitive and Pythagorean holes of graphs: embodiments of Pythagorean
triples, set-graphs and Jaco graphs, with exact checks of their closed forms."""

from .graph import (
    PYTHAGOREAN,
    DegreePredicate,
    Graph,
    GraphError,
    HoleReport,
    Triangle,
    build_graph,
    enumerate_triangles,
    hole_report,
    holes_matching,
    parse_edge_list,
    primitive_degree,
    primitive_hole_number,
)
from .triples import Triple, TripleType, classify, is_pythagorean, primitive_triples_up_to

__all__ = [
    "PYTHAGOREAN",
    "DegreePredicate",
    "Graph",
    "GraphError",
    "HoleReport",
    "Triangle",
    "Triple",
    "TripleType",
    "build_graph",
    "classify",
    "enumerate_triangles",
    "hole_report",
    "holes_matching",
    "is_pythagorean",
    "parse_edge_list",
    "primitive_degree",
    "primitive_hole_number",
    "primitive_triples_up_to",
]

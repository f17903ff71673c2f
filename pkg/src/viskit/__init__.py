"""Exact k-visibility graphs of bars, semi-bars, arcs and semi-arcs."""
from .errors import VisError
from .geometry import (
    Arc, Bar, Representation, ValidationReport, angle, antipode, arcs, bars,
    general_position, semi_arc, semi_bar, validate,
)
from .graph import Graph
from .sightlines import (
    center_split, classify_edges, critical_parameters, interval_graph_of, regions,
    stab_number, visibility_graph, visible_pair,
)

__all__ = [
    "Arc", "Bar", "Graph", "Representation", "ValidationReport", "VisError",
    "angle", "antipode", "arcs", "bars", "center_split", "classify_edges",
    "critical_parameters", "general_position", "interval_graph_of", "regions",
    "semi_arc", "semi_bar", "stab_number", "validate", "visibility_graph",
    "visible_pair",
]

"""File formats, rendering and the command line."""
from .formats import emit_graph, emit_representation, parse_graph, parse_representation
from .render import render_svg

__all__ = ["emit_graph", "emit_representation", "parse_graph", "parse_representation", "render_svg"]

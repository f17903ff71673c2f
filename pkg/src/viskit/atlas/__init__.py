"""Constructions, the semi-arc characterization, search, and decompositions."""
from .characterization import (
    CharacterizationWitness, DiagonalSpec, build_from_witness, extract_witness,
    is_diagonal_graph,
)
from .constructions import gen_complete_semiarc, gen_polygonal, gen_semiarc_max
from .named import gen_arc_max, gen_named
from .search import search_representation
from .thickness import thickness_decomposition

__all__ = [
    "CharacterizationWitness", "DiagonalSpec", "build_from_witness", "extract_witness",
    "gen_arc_max", "gen_complete_semiarc", "gen_named", "gen_polygonal",
    "gen_semiarc_max", "is_diagonal_graph", "search_representation",
    "thickness_decomposition",
]

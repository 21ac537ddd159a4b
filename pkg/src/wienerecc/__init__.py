"""Wiener index and graph eccentricity: invariants, constructions and exhaustive checks."""

from .graph import (
    UNREACHABLE,
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    bridges,
    complement,
    graph_from_edges,
    is_connected,
    is_tree,
    universal_vertex_count,
)
from .graph6 import Graph6Error
from .graph6 import decode as g6_decode
from .graph6 import encode as g6_encode
from .invariants import InvariantSummary, VertexProfile, is_caterpillar, is_self_centered, summarize, tree_center

__version__ = "0.1.0"

__all__ = [
    "UNREACHABLE",
    "DistanceMatrix",
    "Graph",
    "Graph6Error",
    "InvariantSummary",
    "VertexProfile",
    "all_pairs_distances",
    "bridges",
    "complement",
    "g6_decode",
    "g6_encode",
    "graph_from_edges",
    "is_caterpillar",
    "is_connected",
    "is_self_centered",
    "is_tree",
    "summarize",
    "tree_center",
    "universal_vertex_count",
]

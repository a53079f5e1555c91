"""Signless Laplacian spectral radius toolkit: graphs, q(G), bounds, transforms and exhaustive extremal checks."""

from spex.errors import SpexError
from spex.graph import Graph, from_edge_list
from spex.graph6 import parse_graph6, to_graph6
from spex.spectral import q_radius

__all__ = ["Graph", "SpexError", "from_edge_list", "parse_graph6", "q_radius", "to_graph6"]
__version__ = "0.1.0"

"""Exact general position number toolkit for small graphs."""

from gpkit.graph import (
    DistMatrix,
    Graph,
    GraphError,
    all_pairs_distances,
    canonical_key,
    clique_number,
    complement,
    diameter,
    girth,
    graph_from_edges,
    induced_subgraph,
    is_connected,
)
from gpkit.graph6 import parse_graph6, to_graph6
from gpkit.kernels import BACKEND

__version__ = "0.1.0"

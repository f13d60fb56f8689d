"""Sequence mixed graphs, iterated line digraphs and mixed Moore bounds."""

from .core import (
    DegreeTriple,
    Digraph,
    GraphError,
    MixedGraph,
    adjacency_matrix,
    associated_digraph,
    build,
    degrees,
    from_digraph,
    total_regularity,
)
from .lineage import (
    WalkLabel,
    canonical_walk,
    check_delta1_isomorphism,
    iterated_line_digraph,
    line_digraph,
    sequence_graph,
    sequence_mixed_direct,
    sequence_mixed_quotient,
)
from .metrics import UNREACHABLE, DistanceReport, all_pairs, diameter, distances_from, layer_counts
from .moore import MooreStatus, classify_moore, moore_bound, moore_bound_closed, moore_layers

__version__ = "0.1.0"

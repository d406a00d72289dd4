"""Exact rank of self-loop graphs, the rank-3 families built on a looped 4-cycle, and
exhaustive checks of the low-rank claims about them."""

from .families import (
    FamilyId,
    FamilyInstance,
    NamedGraphId,
    build_family,
    build_named,
    family,
    match_family,
)
from .graph import (
    ClusterDecomposition,
    SelfLoopGraph,
    adjacency_matrix,
    cluster_decomposition,
    complete,
    contains_cycle,
    cycle,
    dist,
    induced,
    is_connected,
    is_triangle_free,
    join_over,
    path,
    set_dist,
    with_loops,
)
from .iso import CanonicalForm, are_isomorphic, automorphism_count, canonical_form, contains_induced
from .rank import minor_rank_oracle, rank, rank_graph

__version__ = "0.1.0"

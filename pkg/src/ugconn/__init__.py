"""Connectivity workbench for Cayley graphs of unicyclic transposition sets."""

from .cayley import (
    CayleyGraph,
    CutAnalysis,
    DenseGraph,
    build_cayley,
    canonical_four_cycle,
    common_neighbor_count,
    component_analysis,
    cross_edges,
    edge_label,
    enumerate_4cycles,
    girth,
    out_neighbors,
    to_dot,
    to_edgelist,
    to_graph6,
    with_redirected_cross_edge,
)
from .cuts import (
    ConnectivityResult,
    CutWitness,
    build_cycle_neighborhood_cut,
    disconnection_census,
    is_cyclic_cut,
    is_good_neighbor_cut,
    is_vertex_cut,
    large_component_profile,
    min_cyclic_cut_exhaustive,
    min_good_neighbor_cut_exhaustive,
    min_neighborhood_over_4subsets,
    randomized_cut_falsifier,
    render_witness,
    vertex_connectivity,
    vertex_connectivity_detail,
)
from .genset import (
    GeneratingGraph,
    GeneratingGraphError,
    PeelChoice,
    build_generating_graph,
    choose_peel,
    classify,
    describe,
    relabel_to_canonical,
)
from .lemmas import (
    CHECK_IDS,
    TOOL_VERSION as __version__,
    VerificationReport,
    verify_all,
)
from .perms import (
    CapacityError,
    apply_swap,
    identity,
    parity,
    parse_perm_string,
    perm_string,
    rank_perm,
    unrank_perm,
    validate_perm,
)

__all__ = [
    "CayleyGraph",
    "CutAnalysis",
    "DenseGraph",
    "ConnectivityResult",
    "CutWitness",
    "GeneratingGraph",
    "GeneratingGraphError",
    "PeelChoice",
    "VerificationReport",
    "CapacityError",
    "CHECK_IDS",
    "apply_swap",
    "build_cayley",
    "build_cycle_neighborhood_cut",
    "build_generating_graph",
    "canonical_four_cycle",
    "choose_peel",
    "classify",
    "common_neighbor_count",
    "component_analysis",
    "cross_edges",
    "describe",
    "disconnection_census",
    "edge_label",
    "enumerate_4cycles",
    "girth",
    "identity",
    "is_cyclic_cut",
    "is_good_neighbor_cut",
    "is_vertex_cut",
    "large_component_profile",
    "min_cyclic_cut_exhaustive",
    "min_good_neighbor_cut_exhaustive",
    "min_neighborhood_over_4subsets",
    "out_neighbors",
    "parity",
    "parse_perm_string",
    "perm_string",
    "randomized_cut_falsifier",
    "rank_perm",
    "relabel_to_canonical",
    "render_witness",
    "to_dot",
    "to_edgelist",
    "to_graph6",
    "unrank_perm",
    "validate_perm",
    "verify_all",
    "vertex_connectivity",
    "vertex_connectivity_detail",
    "with_redirected_cross_edge",
]

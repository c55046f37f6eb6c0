"""Exact strong clique numbers, witnesses, and bound verification for
graphs with forbidden cycles."""

from .graph import (
    Graph,
    GraphProjection,
    INFINITY,
    bipartition,
    build_graph,
    delete,
    edge_induced_subgraph,
    from_edgelist,
    from_graph6,
    max_degree,
    to_edgelist,
    to_graph6,
    vertex_distance,
)
from .matching import Matching, VertexCover, konig_cover, maximum_matching, vertex_cover_number
from .strong import (
    StrongCliqueWitness,
    brute_force_sc,
    conflict_graph,
    edge_distance,
    is_strong_clique,
    strong_clique_number,
)
from .cycles import CycleWitness, find_cycle_of_length, girth, is_free
from .witness import (
    MinimalityReport,
    MinimalReduction,
    SemiCompleteDigraph,
    XMPath,
    auxiliary_digraph,
    check_minimal_properties,
    cycle_through_matching,
    find_xm_path,
    is_x_special,
    path_through_matching,
    s_minimal_reduce,
    semicomplete_hamiltonian_path,
)
from .generators import (
    GeneratorSpec,
    bipartite_pendant_extremal,
    c5_blowup,
    complete_bipartite,
    complete_graph,
    complete_plus_pendants,
    cycle_graph,
    enumerate_graphs,
    path_graph,
    petersen_graph,
    random_bipartite,
    random_graph,
    special_matching_graph,
    standard_graph,
    star_graph,
)
from .verifier import (
    BoundSpec,
    BatchSummary,
    DecompositionAudit,
    MatchingDecomposition,
    IDENTIFIERS,
    PreconditionResult,
    VerificationReport,
    batch_verify,
    bound_value,
    decomposition_audit,
    preconditions,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

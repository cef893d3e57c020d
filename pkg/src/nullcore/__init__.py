"""nullcore: exact-arithmetic analysis of adjacency nullspaces.

The package classifies the vertices of a finite simple graph by how
they meet the kernel of its adjacency matrix (core vertices, their
neighbours, and the remote remainder), assembles the block form that
the classification induces, and exposes the reductions, tree
algorithms, minimal-configuration tests, and edge-perturbation
guarantees built on top of it.  All arithmetic is exact: integers,
fractions, and integer characteristic polynomials, never floats.
"""

from .analysis import (
    AnalysisReport,
    CoreLabelling,
    TheoremCheck,
    VertexClass,
    VertexPartition,
    analyze,
    classify_vertices,
    core_labelling,
    cv_by_deletion,
    is_core_graph,
    is_half_core,
    is_slim,
    no_single_core_neighbour_check,
    nullity,
    report_to_json,
    require_independent_cv,
    slim_reduce,
    unicyclic_analysis,
    verify_block_theorems,
)
from .errors import (
    DuplicateEdgeError,
    EdgeListParseError,
    MalformedHeaderError,
    NonIndependentCoreError,
    PreconditionError,
    SelfLoopError,
    TheoremViolationError,
    VertexRangeError,
)
from .graphs import (
    Graph,
    VertexProvenance,
    add_edge,
    adjacency_matrix,
    delete_edge,
    delete_vertex,
    gen_cycle,
    gen_path,
    gen_random_bipartite,
    gen_random_graph,
    gen_random_tree,
    gen_random_unicyclic,
    gen_star,
    incidence_matrix,
    induced_subgraph,
    is_bipartite,
    is_connected,
    is_forest,
    is_tree,
    is_unicyclic,
    parse_edge_list,
    serialize_edge_list,
    subdivision,
    to_dot,
)
from .linalg import (
    CharPoly,
    IntMatrix,
    KernelBasis,
    RatVector,
    char_poly,
    det,
    is_nonsingular,
    mat_vec,
    nullspace_basis,
    rank,
)
from .minimal import (
    MCReport,
    bipartite_mc_slim_equivalence,
    bipartite_nullity1_structure,
    bipartite_parity_check,
    is_minimal_configuration,
)
from .perturb import (
    EdgeCandidate,
    PerturbationReport,
    apply_and_report,
    candidate_edges,
    greedy_densify,
    remove_and_report,
    safe_additions,
    verify_cv_ncv_theorem,
)
from .rng import SplitMix64
from .trees import (
    ReductionTrace,
    cfvr_perfect_matching,
    end_vertex_core_vertices,
    incidence_rank_check,
    inverse_subdivision,
    is_mc_tree,
    matching_number,
    pendant_reduction,
    subdivision_charpoly_identity,
    tree_nullity_identity,
)
from .verify import SUITES, SuiteResult, VerifySuiteConfig, run_suite

__version__ = "1.0.0"

__all__ = [
    "AnalysisReport",
    "CharPoly",
    "CoreLabelling",
    "DuplicateEdgeError",
    "EdgeCandidate",
    "EdgeListParseError",
    "Graph",
    "IntMatrix",
    "KernelBasis",
    "MCReport",
    "MalformedHeaderError",
    "NonIndependentCoreError",
    "PerturbationReport",
    "PreconditionError",
    "RatVector",
    "ReductionTrace",
    "SUITES",
    "SelfLoopError",
    "SplitMix64",
    "SuiteResult",
    "TheoremCheck",
    "TheoremViolationError",
    "VertexClass",
    "VertexPartition",
    "VertexProvenance",
    "VertexRangeError",
    "VerifySuiteConfig",
    "add_edge",
    "adjacency_matrix",
    "analyze",
    "apply_and_report",
    "bipartite_mc_slim_equivalence",
    "bipartite_nullity1_structure",
    "bipartite_parity_check",
    "candidate_edges",
    "cfvr_perfect_matching",
    "char_poly",
    "classify_vertices",
    "core_labelling",
    "cv_by_deletion",
    "delete_edge",
    "delete_vertex",
    "det",
    "end_vertex_core_vertices",
    "gen_cycle",
    "gen_path",
    "gen_random_bipartite",
    "gen_random_graph",
    "gen_random_tree",
    "gen_random_unicyclic",
    "gen_star",
    "greedy_densify",
    "incidence_matrix",
    "incidence_rank_check",
    "induced_subgraph",
    "inverse_subdivision",
    "is_bipartite",
    "is_connected",
    "is_core_graph",
    "is_forest",
    "is_half_core",
    "is_mc_tree",
    "is_minimal_configuration",
    "is_nonsingular",
    "is_slim",
    "is_tree",
    "is_unicyclic",
    "mat_vec",
    "matching_number",
    "no_single_core_neighbour_check",
    "nullity",
    "nullspace_basis",
    "parse_edge_list",
    "pendant_reduction",
    "rank",
    "remove_and_report",
    "report_to_json",
    "require_independent_cv",
    "run_suite",
    "safe_additions",
    "serialize_edge_list",
    "slim_reduce",
    "subdivision",
    "subdivision_charpoly_identity",
    "to_dot",
    "tree_nullity_identity",
    "unicyclic_analysis",
    "verify_block_theorems",
    "verify_cv_ncv_theorem",
]

"""Exact cycle/cut homology and algebraic spanning trees for oriented
hypergraphs, over the integers and the rationals."""

from .boundary import (
    boundary,
    boundary_functional,
    boundary_inner_product,
    boundary_matrix,
    canonical_inner_product,
    coboundary,
)
from .core import (
    Chain,
    Cochain,
    HypergraphValidationError,
    InternalInconsistencyError,
    OrientedHypergraph,
    Ring,
    chain_to_cochain,
    cochain_to_chain,
    validate,
    validation_report,
)
from .exact_linalg import (
    ExactMatrix,
    ModuleStructure,
    SnfDecomposition,
    annihilator_basis,
    image_basis,
    image_rank,
    is_direct_summand,
    kernel_basis,
    lattice_contains,
    quotient_structure,
    smith_normal_form,
    solve_integer,
    solve_rational,
    sublattice_equal,
)
from .fixtures import (
    BUILTIN_EXAMPLES,
    main_example,
    parallel_edges,
    path_graph,
    random_hypergraph,
    triangle_graph,
)
from .homology import (
    DecompositionReport,
    GraphLikenessReport,
    HomologyReport,
    PerpComparison,
    Witness,
    annihilator_of_cycles,
    boundary_functional_injectivity_check,
    boundary_functional_lattice,
    cohomology_hom_iso_check,
    cycle_cut_decomposition,
    cycles_equal_cut_perp_check,
    graph_likeness,
    homology,
    orthogonal_decomposition_rational,
    represents_dualized_boundary,
)
from .spanning_tree import (
    SearchLimitExceeded,
    SpanningTree,
    TreeAxiomsReport,
    find_spanning_tree_integer,
    find_spanning_tree_rational,
    is_integral,
    vector_space_spanning_tree,
    verify_tree_axioms,
)

__all__ = [
    "BUILTIN_EXAMPLES",
    "Chain",
    "Cochain",
    "DecompositionReport",
    "ExactMatrix",
    "GraphLikenessReport",
    "HomologyReport",
    "HypergraphValidationError",
    "InternalInconsistencyError",
    "ModuleStructure",
    "OrientedHypergraph",
    "PerpComparison",
    "Ring",
    "SearchLimitExceeded",
    "SnfDecomposition",
    "SpanningTree",
    "TreeAxiomsReport",
    "Witness",
    "annihilator_basis",
    "annihilator_of_cycles",
    "boundary",
    "boundary_functional",
    "boundary_functional_injectivity_check",
    "boundary_functional_lattice",
    "boundary_inner_product",
    "boundary_matrix",
    "canonical_inner_product",
    "chain_to_cochain",
    "coboundary",
    "cochain_to_chain",
    "cohomology_hom_iso_check",
    "cycle_cut_decomposition",
    "cycles_equal_cut_perp_check",
    "find_spanning_tree_integer",
    "find_spanning_tree_rational",
    "graph_likeness",
    "homology",
    "image_basis",
    "image_rank",
    "is_direct_summand",
    "is_integral",
    "kernel_basis",
    "lattice_contains",
    "main_example",
    "orthogonal_decomposition_rational",
    "parallel_edges",
    "path_graph",
    "quotient_structure",
    "random_hypergraph",
    "represents_dualized_boundary",
    "smith_normal_form",
    "solve_integer",
    "solve_rational",
    "sublattice_equal",
    "triangle_graph",
    "validate",
    "validation_report",
    "vector_space_spanning_tree",
    "verify_tree_axioms",
]

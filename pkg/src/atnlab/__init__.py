"""Exact computation and verification laboratory for Alon-Tarsi numbers.

Two independent exact routes to the same invariant:

* polynomial route: sparse expansion of the product of edge differences
  with per-vertex exponent caps, ascending until a surviving monomial
  appears;
* orientation route: enumerate outdegree vectors level by level, realize
  each by max flow, and compare even against odd balanced arc-subset
  counts.

Around them: graph families and operators, 1-factorizations with the
orientations they induce, a certified k-choosability decider, and a
harness that scores claimed formulas against computed values.
"""

from .budget import Budget, BudgetExceededError
from .choosability import (ChoosabilityResult, chromatic_number,
                           is_k_choosable, proper_coloring_exists)
from .factorization import (Factorization, format_factorization,
                            one_factorize_complete,
                            one_factorize_regular_bipartite,
                            parse_factorization, validate_factorization)
from .graphs import (FAMILIES, FamilySpec, Graph, atn_lower_bound,
                     bipartition, build_family, circulant_bipartite, complete,
                     complete_bipartite, complete_multipartite,
                     connected_components, cycle, format_edge_list,
                     line_graph, parse_edge_list, path,
                     random_regular_bipartite, read_graph, subdivision_graph,
                     total_graph, write_graph)
from .harness import (SUITE_IDS, OracleMismatchError, claimed_value,
                      compute_at, format_report, run_suite)
from .orientations import (FactorOrientation, Orientation,
                           eulerian_orientation, factor_index_orientation,
                           format_orientation, max_outdegree,
                           pairwise_eulerian_orientation, parse_orientation,
                           read_orientation, unbalanced_class_pairs,
                           write_orientation)
from .parity import (ParityDiff, atn_via_orientations,
                     coefficient_via_orientations, eulerian_parity_diff,
                     orientation_sign, orientation_with_outdegrees,
                     verify_correspondence)
from .polynomials import (SparsePoly, Term, atn_via_polynomial, coefficient,
                          format_polynomial, graph_polynomial,
                          min_max_exponent, parse_polynomial)

__version__ = "0.1.0"

__all__ = [
    "Budget", "BudgetExceededError",
    "ChoosabilityResult", "chromatic_number", "is_k_choosable",
    "proper_coloring_exists",
    "Factorization", "format_factorization", "one_factorize_complete",
    "one_factorize_regular_bipartite", "parse_factorization",
    "validate_factorization",
    "FAMILIES", "FamilySpec", "Graph", "atn_lower_bound", "bipartition",
    "build_family", "circulant_bipartite", "complete", "complete_bipartite",
    "complete_multipartite", "connected_components", "cycle",
    "format_edge_list", "line_graph", "parse_edge_list", "path",
    "random_regular_bipartite", "read_graph", "subdivision_graph",
    "total_graph", "write_graph",
    "SUITE_IDS", "OracleMismatchError", "claimed_value", "compute_at",
    "format_report", "run_suite",
    "FactorOrientation", "Orientation", "eulerian_orientation",
    "factor_index_orientation", "format_orientation", "max_outdegree",
    "pairwise_eulerian_orientation", "parse_orientation", "read_orientation",
    "unbalanced_class_pairs", "write_orientation",
    "ParityDiff", "atn_via_orientations", "coefficient_via_orientations",
    "eulerian_parity_diff", "orientation_sign", "orientation_with_outdegrees",
    "verify_correspondence",
    "SparsePoly", "Term", "atn_via_polynomial", "coefficient",
    "format_polynomial", "graph_polynomial", "min_max_exponent",
    "parse_polynomial",
]

"""Spectral toolkit for the convex combination of a graph's degree and
adjacency matrices: assembly, eigensolving, closed forms, bound evaluation,
and brute-force extremal verification."""

from .bounds import (BoundRecord, BoundReport, bound_report, global_identities,
                     lambda_min_bounds, radius_bounds, rotation_test)
from .closed_forms import (ClosedFormSpectrum, join_regular_radius,
                           multipartite_radius, regular_shift,
                           spectrum_complete, spectrum_complete_bipartite,
                           spectrum_complete_multipartite, spectrum_star)
from .combinatorics import (chromatic_number, diameter, enumerate_graphs,
                            is_clique_free, max_clique_size, maxcut,
                            vertex_orbits)
from .eigensolver import (AlphaSweep, EigenPair, Spectrum, alpha_sweep,
                          decompose, distinct_count, eigenvalues_only,
                          eigvalsh_batch, extreme_pair, full_spectrum,
                          psd_threshold)
from .errors import (AlphaspecError, CapacityError, DimensionError,
                     GraphFormatError, ParameterError, SolverError)
from .extremal import (ExtremalResult, MonotonicityReport, TuranVerification,
                       maximize_over_class, monotonicity_check, verify_turan)
from .graphs import (Graph, GraphSpec, complete, complete_bipartite,
                     complete_multipartite, components, cycle, disjoint_union,
                     edgeless, format_edge_list, is_connected, join,
                     parse_edge_list, path, split, star, turan)
from .matrices import (alpha_matrix, assemble, identity_residual,
                       matrix_from_json, matrix_to_json, quadratic_form,
                       vertex_score)

__version__ = "0.1.0"

__all__ = [
    "AlphaSweep", "AlphaspecError", "BoundRecord", "BoundReport",
    "CapacityError", "ClosedFormSpectrum", "DimensionError", "EigenPair",
    "ExtremalResult", "Graph", "GraphFormatError", "GraphSpec",
    "MonotonicityReport", "ParameterError", "SolverError", "Spectrum",
    "TuranVerification", "alpha_matrix", "alpha_sweep", "assemble",
    "bound_report", "chromatic_number", "complete", "complete_bipartite",
    "complete_multipartite", "components", "cycle", "decompose", "diameter",
    "disjoint_union", "distinct_count", "edgeless", "eigenvalues_only",
    "eigvalsh_batch", "enumerate_graphs", "extreme_pair", "format_edge_list",
    "full_spectrum", "global_identities", "identity_residual", "is_clique_free",
    "is_connected", "join", "join_regular_radius", "lambda_min_bounds",
    "matrix_from_json", "matrix_to_json", "max_clique_size", "maxcut",
    "maximize_over_class", "monotonicity_check", "multipartite_radius",
    "parse_edge_list", "path", "psd_threshold", "quadratic_form",
    "radius_bounds", "regular_shift", "rotation_test", "split",
    "spectrum_complete", "spectrum_complete_bipartite",
    "spectrum_complete_multipartite", "spectrum_star", "star", "turan",
    "vertex_orbits", "vertex_score", "verify_turan",
]

"""Transversals of uniform hypergraphs, their extremal cases, and the
multigraph matching and edge-colouring tools behind them."""

from .core import (Hypergraph, are_isomorphic, canonical_form, components, degree,
                   delete_vertices, format_hypergraph, is_connected, is_k_uniform, isomorphism,
                   parse_hypergraph, read_hypergraph, write_hypergraph)
from .errors import ContractViolation, InputError, ParseError
from .extremal import ExtremalClass, Tag, classify, gen_E, gen_T, observation3_check, triangle_blocks
from .multigraph import (EdgeColoring, Matching, Multigraph, chromatic_index_exact,
                         contains_shannon_submultigraph, edge_color_shannon, format_multigraph,
                         is_shannon_multigraph, make_shannon, matching_bound_check, matching_number,
                         max_matching, parse_multigraph)
from .reduction import ConflictMultigraph, claim_d_bound, to_conflict_multigraph, transversal_from_matching
from .transversal import (Transversal, cm_bound, format_fraction, is_transversal,
                          meets_bound_with_equality, tau_exact, tau_set_containing, transversal_number)

__version__ = "0.1.0"

__all__ = [
    "ConflictMultigraph", "ContractViolation", "EdgeColoring", "ExtremalClass", "Hypergraph",
    "InputError", "Matching", "Multigraph", "ParseError", "Tag", "Transversal", "are_isomorphic",
    "canonical_form", "chromatic_index_exact", "claim_d_bound", "classify", "cm_bound", "components",
    "contains_shannon_submultigraph", "degree", "delete_vertices", "edge_color_shannon",
    "format_fraction", "format_hypergraph", "format_multigraph", "gen_E", "gen_T", "is_connected",
    "is_k_uniform", "is_shannon_multigraph", "is_transversal", "isomorphism", "make_shannon",
    "matching_bound_check", "matching_number", "max_matching", "meets_bound_with_equality",
    "observation3_check", "parse_hypergraph", "parse_multigraph", "read_hypergraph",
    "tau_exact", "tau_set_containing", "to_conflict_multigraph", "transversal_from_matching",
    "transversal_number", "triangle_blocks", "write_hypergraph",
]

"""Null-space decomposition of trees over exact rationals.

The adjacency matrix of a tree splits its vertices into the support (nonzero
in some null vector), the core (neighbors of the support) and the rest.  The
induced S-forest and N-forest carry the tree's matching and independence
structure exactly; this package computes the decomposition, evaluates the
formulas it induces and verifies the structural facts against independent
combinatorial oracles, all in exact rational arithmetic.
"""

from .decomposition import (
    Check,
    Decomposition,
    FormulaValues,
    SPart,
    VerificationReport,
    VerifyConfig,
    decompose,
    formulas,
    is_n_tree,
    is_s_tree,
    neumaier_counterexamples,
    verify,
)
from .matching import (
    CountResult,
    CoverResult,
    IndependenceResult,
    Matching,
    core_saturating_matching,
    desaturate,
    domination_number_bruteforce,
    edmond_gallai,
    enumerate_maximum_matchings,
    hall_check,
    independence,
    matching_count,
    matching_number,
    maximum_matching,
    minimum_vertex_cover,
    reroute_connection_edge,
)
from .linalg import (
    adjacency_matrix,
    characteristic_polynomial,
    combine_full_support,
    format_rational,
    format_vector,
    lift,
    null_space_basis,
    rank_nullity,
    restrict,
    support,
    weight,
)
from .oracle import OracleBound
from .tree import (
    Component,
    Forest,
    Tree,
    attach_pendant,
    branch,
    delete_vertex,
    format_edge_list,
    induced_components,
    parse_tree,
    random_tree,
    rewire,
    to_dot,
)

__version__ = "0.1.0"

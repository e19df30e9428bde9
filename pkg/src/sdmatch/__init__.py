"""Disjoint bipartite matchings: solvers, reductions, and certificates."""

from .graph import (
    BipartiteGraph,
    DmInstance,
    FormatError,
    Matching,
    SdmInstance,
    SPair,
    is_matching,
    parse_instance,
    parse_solution,
    serialize_instance,
    serialize_solution,
    validate_graph,
    verify_spair,
)
from .matching import ACTIVE_KERNEL, HallCertificate, max_matching, x_saturating_certificate
from .flow import Arc, DegreeBounds, feasible_flow, gf_factor
from .coloring import EdgeColoring, konig_color, two_color_with_anchor
from .lebensold import LebensoldVerdict, k_disjoint_saturating, lebensold_condition
from .solve import (
    BudgetExhausted,
    Method,
    SolveOutcome,
    count_spairs_exact,
    solve,
    solve_bounded_s,
    solve_dm_exact,
    solve_exact,
    solve_poly_large_s,
)
from .reductions import (
    CnfFormula,
    GadgetMap,
    decode_spair_to_assignment,
    encode_assignment_to_spair,
    extend_spair_to_dm,
    parse_dimacs_cnf,
    project_dm_to_spair,
    reduce_3sat_to_sdm,
    reduce_sdm_to_dm,
    true_false_pairs,
)

__version__ = "0.1.0"

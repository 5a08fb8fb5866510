"""Exact-computation laboratory for total domination games on small graphs.

Provides an immutable bitmask graph core, generators for the graph families
the solvers are certified against, exact exhaustive invariants, memoized
minimax engines for the sequential game invariants, scripted proof-style
policies, and a verification harness that recomputes every frozen expected
value.
"""

from .graph import (
    SOLVER_CAP,
    CapacityError,
    Graph,
    IsolatedVertexError,
    VertexSet,
    bipartition,
    build_graph,
    connected_components,
    distance,
    is_bipartite,
    is_connected,
    is_minimal_total_dominating,
    is_minimal_total_dominating_by_removal,
    is_open_open_irredundant,
    is_total_dominating,
    neighborhood_of_set,
    private_neighborhoods,
)
from .families import (
    FamilySpec,
    FamilySpecError,
    corona,
    disjoint_union,
    family,
    graph_join,
    graph_power,
    parse_family_spec,
)
from .invariants import (
    InvariantValue,
    WitnessError,
    gamma_t,
    has_perfect_matching,
    induced_matching_number,
    is_induced_matching,
    is_perfect_matching,
    ooir,
    upper_gamma_t,
)
from .games import (
    GameState,
    IndicatedGameSolver,
    Policy,
    PolicyError,
    Role,
    best_response_length,
    grundy_t,
    gtg,
    gti,
    optimal_policy,
    play_game,
)
from .strategies import (
    PartitionWitness,
    build_partition_witness,
    dominator_leaf_policy,
    dominator_path_policy,
    staller_partition_policy,
)
from .graphio import GraphTextError, parse_graph, serialize_graph
from .verify import (
    ContinuationReport,
    SuiteReport,
    SurveyRow,
    TreeProbeReport,
    check_continuation,
    enumerate_trees,
    explore_trees,
    isolate_free_graphs,
    run_paper_suite,
    survey,
)

__version__ = "0.1.0"

__all__ = [
    "SOLVER_CAP",
    "CapacityError",
    "ContinuationReport",
    "FamilySpec",
    "FamilySpecError",
    "GameState",
    "Graph",
    "GraphTextError",
    "IndicatedGameSolver",
    "InvariantValue",
    "IsolatedVertexError",
    "PartitionWitness",
    "Policy",
    "PolicyError",
    "Role",
    "SuiteReport",
    "SurveyRow",
    "TreeProbeReport",
    "VertexSet",
    "WitnessError",
    "best_response_length",
    "bipartition",
    "build_graph",
    "build_partition_witness",
    "check_continuation",
    "connected_components",
    "corona",
    "disjoint_union",
    "distance",
    "dominator_leaf_policy",
    "dominator_path_policy",
    "enumerate_trees",
    "explore_trees",
    "family",
    "gamma_t",
    "graph_join",
    "graph_power",
    "grundy_t",
    "gtg",
    "gti",
    "has_perfect_matching",
    "induced_matching_number",
    "is_bipartite",
    "is_connected",
    "is_induced_matching",
    "is_minimal_total_dominating",
    "is_minimal_total_dominating_by_removal",
    "is_open_open_irredundant",
    "is_perfect_matching",
    "is_total_dominating",
    "isolate_free_graphs",
    "neighborhood_of_set",
    "ooir",
    "optimal_policy",
    "parse_family_spec",
    "parse_graph",
    "play_game",
    "private_neighborhoods",
    "run_paper_suite",
    "serialize_graph",
    "staller_partition_policy",
    "survey",
    "upper_gamma_t",
]

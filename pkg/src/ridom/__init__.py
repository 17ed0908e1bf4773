"""Exact k-rainbow independent domination and related invariants of small graphs."""

from .bounds import PartialGid, check_value_k_characterization, degree_lower_bound, partial_gid_bound
from .graph import (
    FamilySpec,
    Graph,
    GraphError,
    build_family,
    cartesian_product,
    complement,
    connected_components,
    from_edge_list,
)
from .graph6 import emit_graph6, parse_graph6
from .solvers import (
    GuardExceeded,
    RainbowSetLabeling,
    RikLabeling,
    SearchStats,
    SolveResult,
    domination_number,
    enumerate_optimal_rik,
    independence_number,
    independent_domination_number,
    independent_rainbow_domination_number,
    oracle_rik_via_product,
    rainbow_domination_number,
    solve_rik,
    verify_rik,
)

__version__ = "0.1.0"

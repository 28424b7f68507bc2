"""Correspondence coloring with variable degeneracy budgets.

Covers pair each graph edge with a partial matching between color fibers;
a coloring is valid when its induced pair graph admits an order in which
every element has fewer earlier neighbors than its budget.  The package
provides verification with witness orders, residual-budget extension
operations, an exhaustive exact solver, a constructive recursive solver
for plane graphs with budget totals >= 5 capped at 2, and the reductions
to list coloring and list-forested coloring.
"""

from .coloring import (
    combine_colorings,
    greedy_extend,
    induced_pair_graph,
    order_with_prefix,
    residual_budget,
    verify_coloring,
    verify_on_domain,
)
from .configurations import check_configuration_conditions, extend_over_configuration
from .covers import Budget, Coloring, Cover, Order, Pair, PairGraph
from .cycles import CycleSet, FamilyA, NoAdj34, NoCycleLengths, check_family, enumerate_cycles
from .degeneracy import order_is_valid, strictly_degenerate_order
from .generators import gen_planar_triangulation, gen_random_budget, gen_random_cover
from .graphs import SimpleGraph, complete_graph, cycle_graph, path_graph
from .planar import (
    FaceSet,
    PlaneGraph,
    faces,
    fan_neighbors,
    find_chord,
    find_separating_triangle,
    split_on_chord,
    triangulate_interior,
)
from .reductions import (
    budget_forest,
    budget_list,
    budget_mixed,
    canonicalize_lists,
    check_partition,
    color_classes,
    identity_cover,
)
from .solvers import (
    DEFAULT_EXACT_LIMIT,
    extend_precolored_triangle,
    solve_exact,
    solve_planar_dpg52,
)

__version__ = "0.1.0"

__all__ = [
    "Budget", "Coloring", "Cover", "CycleSet", "DEFAULT_EXACT_LIMIT", "FaceSet",
    "FamilyA", "NoAdj34", "NoCycleLengths", "Order", "Pair", "PairGraph",
    "PlaneGraph", "SimpleGraph", "budget_forest", "budget_list", "budget_mixed",
    "canonicalize_lists", "check_configuration_conditions", "check_family",
    "check_partition", "color_classes", "combine_colorings", "complete_graph",
    "cycle_graph", "enumerate_cycles", "extend_over_configuration",
    "extend_precolored_triangle", "faces", "fan_neighbors", "find_chord",
    "find_separating_triangle", "gen_planar_triangulation", "gen_random_budget",
    "gen_random_cover", "greedy_extend", "identity_cover", "induced_pair_graph",
    "order_is_valid", "order_with_prefix", "path_graph", "residual_budget",
    "solve_exact", "solve_planar_dpg52", "split_on_chord",
    "strictly_degenerate_order", "triangulate_interior", "verify_coloring",
    "verify_on_domain",
]

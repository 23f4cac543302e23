"""Dominating set on T-graphs and its supporting pieces."""

from .chordal import chordless_cycle, clique_tree, is_chordal, maximal_cliques
from .extension import NiceTree, solve_extension
from .oracle import constrained_domset_oracle, domset_oracle, min_dominating_set
from .pipeline import (
    DomsetSolution,
    coloring,
    domination_number_chordal,
    domination_number_tgraph,
    reduce_for_colors,
    dominated_u_vertices,
    solve_domset_tgraph,
)
from .transform import (
    TreeRequiredError,
    contract_tree_edge,
    contract_tree_edges,
    dissolve_degree_two,
    trim_uncovered_leaves,
)

__all__ = [
    "chordless_cycle",
    "clique_tree",
    "is_chordal",
    "maximal_cliques",
    "NiceTree",
    "solve_extension",
    "constrained_domset_oracle",
    "domset_oracle",
    "min_dominating_set",
    "DomsetSolution",
    "coloring",
    "domination_number_chordal",
    "domination_number_tgraph",
    "reduce_for_colors",
    "dominated_u_vertices",
    "solve_domset_tgraph",
    "TreeRequiredError",
    "contract_tree_edge",
    "contract_tree_edges",
    "dissolve_degree_two",
    "trim_uncovered_leaves",
]

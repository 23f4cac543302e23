"""Dominating set on T-graphs: color-set enumeration, reductions, contraction, DP.

For each candidate set C of U-set colors the instance is simplified so that
every model holds at most one branching node, and the extension DP finds the
smallest dominating set whose colored members use exactly the colors in C.
The answer is the minimum over all C.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from ..graph import SimpleGraph, sorted_vertices
from ..model import HRepresentation
from .chordal import clique_tree
from .extension import NiceTree, solve_extension
from .transform import (
    contract_tree_edges,
    dissolve_degree_two,
    is_nice,
    require_tree,
    trim_uncovered_leaves,
)

INF = math.inf


def color_of(rep: HRepresentation, v):
    """The set of branching nodes in the model of ``v``; None for edge vertices."""
    br = frozenset(x for x in rep.models[v] if not isinstance(x, tuple))
    return br or None


def coloring(rep: HRepresentation) -> dict:
    return {v: c for v in rep.vertices if (c := color_of(rep, v)) is not None}


def color_sort_key(c):
    return (len(c), sorted(c))


@dataclass
class Reduced:
    """Outcome of the reductions for one color set."""

    colors: frozenset
    rep: HRepresentation | None = None
    deleted: frozenset = frozenset()
    required: dict = field(default_factory=dict)
    discarded: str | None = None  # why the color set was skipped


def dominated_u_vertices(rep: HRepresentation, colors: dict, chosen) -> frozenset:
    """U-vertices with a color outside ``chosen`` that every vertex of some chosen color dominates."""
    g = rep.graph
    by_color: dict = {}
    for v, c in colors.items():
        if v in rep.models:
            by_color.setdefault(c, []).append(v)
    out = set()
    for u, cu in colors.items():
        if u not in rep.models or cu in chosen:
            continue
        for c in chosen:
            members = by_color.get(c, ())
            if members and all(g.has_edge(u, w) for w in members):
                out.add(u)
                break
    return frozenset(out)


def covered_tree_edges(rep: HRepresentation, vertices) -> set:
    out = set()
    for eid, a, b in rep.base.edges:
        if any(a in rep.models[v] and b in rep.models[v] for v in vertices):
            out.add(eid)
    return out


def reduce_for_colors(rep: HRepresentation, colors: dict, chosen, d: int) -> Reduced:
    chosen = frozenset(chosen)
    out = Reduced(chosen)
    out.deleted = dominated_u_vertices(rep, colors, chosen)
    rep2 = rep.restrict(v for v in rep.vertices if v not in out.deleted)
    in_c = [v for v in rep2.vertices if colors.get(v) in chosen]
    other_u = [v for v in rep2.vertices if v in colors and colors[v] not in chosen]
    a_edges = covered_tree_edges(rep2, in_c)
    b_edges = covered_tree_edges(rep2, other_u) - a_edges
    # an uncontractible path vertex under a non-chosen U-vertex: C cannot be optimal
    for eid in sorted(b_edges):
        if rep2.e_vertices(eid):
            out.discarded = "blocked_path"
            return out
    rep3 = contract_tree_edges(rep2, a_edges | b_edges)
    if not is_nice(rep3):
        raise AssertionError("contraction left a model with two branching nodes")
    required = {x: set() for x in rep3.base.nodes}
    for v, m in rep3.models.items():
        if colors.get(v) in chosen:
            for x in m:
                if not isinstance(x, tuple):
                    required[x].add(colors[v])
    out.required = {x: frozenset(s) for x, s in required.items()}
    if any(len(s) > d for s in out.required.values()):
        out.discarded = "too_many_colors"
        return out
    out.rep = rep3
    return out


@dataclass
class DomsetSolution:
    value: int
    witness: frozenset
    trace: Counter
    verified: bool = True

    def verdict(self, k: int) -> bool:
        return self.value <= k


def _prepare(rep: HRepresentation) -> HRepresentation:
    return dissolve_degree_two(trim_uncovered_leaves(rep))


def _component_solution(rep: HRepresentation, literal: bool) -> DomsetSolution:
    trace: Counter = Counter()
    if len(rep) == 1:
        return DomsetSolution(1, frozenset(rep.vertices), trace)
    rep = _prepare(rep)
    base = rep.base
    leaves = len(base.leaves())
    d = len(base.nodes) + leaves
    colors = coloring(rep)
    realized = sorted(set(colors.values()), key=color_sort_key)
    limit = min(3 * len(base.nodes) - 2, len(realized))
    trace["colors_realized"] = len(realized)
    best_value, best_set = INF, None
    for size in range(limit + 1):
        if size >= best_value:
            break
        for chosen in combinations(realized, size):
            trace["color_sets"] += 1
            red = reduce_for_colors(rep, colors, chosen, d)
            if red.discarded:
                trace[red.discarded] += 1
                continue
            res = solve_extension(NiceTree(red.rep, colors), red.required, d, literal)
            if res.value == INF:
                trace["infeasible"] += 1
                continue
            trace["solved"] += 1
            if res.value < best_value:
                best_value, best_set = res.value, res.witness
    if best_set is None:
        raise AssertionError("no color set produced a dominating set")
    return DomsetSolution(int(best_value), best_set, trace)


def domination_number_tgraph(rep: HRepresentation, literal: bool = False) -> DomsetSolution:
    """Minimum dominating set of a T-graph given by ``rep``; components are solved apart."""
    require_tree(rep)
    rep.check()
    g = rep.graph
    value, witness, trace = 0, set(), Counter()
    for comp in g.components():
        sol = _component_solution(rep.restrict(comp), literal)
        value += sol.value
        witness |= sol.witness
        trace.update(sol.trace)
    witness = frozenset(witness)
    ok = g.is_dominating(witness) and len(witness) == value
    return DomsetSolution(value, witness, trace, ok)


def solve_domset_tgraph(rep: HRepresentation, k: int, literal: bool = False):
    """``(verdict, solution)``: verdict is True iff a dominating set of size at most k exists."""
    sol = domination_number_tgraph(rep, literal)
    return sol.value <= k, sol


def domination_number_chordal(g: SimpleGraph, literal: bool = False) -> DomsetSolution:
    """Chordal input: one clique tree per component, then the T-graph solver."""
    value, witness, trace = 0, set(), Counter()
    for comp in g.components():
        sub = g.induced_subgraph(comp)
        sol = domination_number_tgraph(clique_tree(sub), literal)
        value += sol.value
        witness |= sol.witness
        trace.update(sol.trace)
    witness = frozenset(witness)
    return DomsetSolution(value, witness, trace, g.is_dominating(witness) and len(witness) == value)


def format_witness(ws) -> str:
    return " ".join(str(v) for v in sorted_vertices(ws))

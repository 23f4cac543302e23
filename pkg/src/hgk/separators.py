"""Minimal separators: an exhaustive oracle and the border-edge candidate scheme.

A vertex set X is a minimal separator exactly when G - X has at least two
full components, i.e. components C with N(C) = X.  With that criterion the
empty set counts whenever G is disconnected.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

import numpy as np

from . import kernels
from .config import default_cap
from .errors import SizeCapError
from .graph import SimpleGraph, sorted_vertices
from .model import HRepresentation


@dataclass(frozen=True)
class BorderCandidate:
    edges: tuple  # subdivision edges, each as a (node, node) pair in path order
    vertices: frozenset  # owners whose model contains both ends of some chosen edge


def full_components(g: SimpleGraph, separator) -> list:
    sep = frozenset(separator)
    rest = [v for v in g.vertices if v not in sep]
    return [c for c in g.components(rest) if g.neighborhood_of_set(c) == sep]


def is_minimal_separator(g: SimpleGraph, separator) -> bool:
    return len(full_components(g, separator)) >= 2


def minimal_separators_oracle(g: SimpleGraph, cap: int | None = None) -> set:
    """Every minimal separator, by scanning all vertex subsets."""
    cap = default_cap("separators") if cap is None else cap
    if g.n > cap:
        raise SizeCapError("separator oracle", g.n, cap)
    if g.n == 0:
        return set()
    flags = kernels.minimal_separator_masks(g.bitmasks())
    return {frozenset(g.vertices_of(int(m))) for m in np.flatnonzero(flags)}


def border_edges_by_path(rep: HRepresentation) -> dict:
    """For each H-edge, the subdivision edges on its path that border some model."""
    sub = rep.subdivision
    out = {}
    for eid, _, _ in rep.base.edges:
        chosen = []
        for u, w in sub.path_edges(eid):
            if any((u in m) != (w in m) for m in rep.models.values()):
                chosen.append((u, w))
        out[eid] = chosen
    return out


def _owners(rep: HRepresentation, edge) -> frozenset:
    u, w = edge
    return rep.vertices_at(u) & rep.vertices_at(w)


def hgraph_separator_candidates(rep: HRepresentation) -> list:
    """All border-edge sets with at most one edge per path, plus all pairs on one path."""
    per_path = border_edges_by_path(rep)
    eids = [eid for eid, _, _ in rep.base.edges]
    owners = {s: _owners(rep, s) for eid in eids for s in per_path[eid]}
    out = []
    choices = [[None] + per_path[eid] for eid in eids]
    for pick in product(*choices):
        s = tuple(x for x in pick if x is not None)
        vs = frozenset().union(*(owners[x] for x in s)) if s else frozenset()
        out.append(BorderCandidate(s, vs))
    for eid in eids:
        for a, b in combinations(per_path[eid], 2):
            out.append(BorderCandidate((a, b), owners[a] | owners[b]))
    return out


def separator_count_limit(n: int, num_h_edges: int) -> int:
    """``(2n+1)^|E(H)| + |E(H)| (2n)^2``."""
    return (2 * n + 1) ** num_h_edges + num_h_edges * (2 * n) ** 2


def lower_bound_theta(r: int, k: int) -> int:
    return k**r


def hgraph_minimal_separators(rep: HRepresentation, cap: int | None = None) -> set:
    """Candidate vertex sets filtered by the full-component criterion."""
    g = rep.graph
    cap = default_cap("separators") if cap is None else cap
    if g.n > cap:
        raise SizeCapError("separator filter", g.n, cap)
    seen = {c.vertices for c in hgraph_separator_candidates(rep)}
    return {x for x in seen if is_minimal_separator(g, x)}


def format_separator(x) -> str:
    return " ".join(str(v) for v in sorted_vertices(x))


def sort_separators(seps) -> list:
    return sorted(seps, key=lambda x: (len(x), [str(v) for v in sorted_vertices(x)]))

"""Caterpillar decompositions of H-graphs and exact cut metrics.

Vertices are ordered by how far their model sits from a fixed branching node.
The caterpillar follows that order and every cut it induces is either a
prefix of the order or a single vertex.  ``cut_mim_exact`` and ``cut_nec``
compute the width measures of a single cut exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from . import kernels
from .config import default_cap
from .errors import SizeCapError, ValidationError
from .graph import SimpleGraph, sorted_vertices, vertex_key
from .model import HRepresentation


@dataclass(frozen=True)
class Decomposition:
    """Rooted tree whose leaves carry the vertices of G."""

    root: str
    parent: dict  # tree node -> parent (root maps to None)
    leaf_map: dict  # leaf tree node -> vertex of G
    order: tuple  # the vertex ordering the caterpillar follows

    @property
    def nodes(self) -> list:
        return list(self.parent)

    def children(self, node: str) -> list:
        return [c for c, p in self.parent.items() if p == node]

    def is_leaf(self, node: str) -> bool:
        return node in self.leaf_map

    def below(self, node: str) -> frozenset:
        """Vertices of G mapped to the leaves under ``node``."""
        out = set()
        stack = [node]
        while stack:
            w = stack.pop()
            if w in self.leaf_map:
                out.add(self.leaf_map[w])
            stack.extend(self.children(w))
        return frozenset(out)

    def cuts(self) -> list:
        """``(tree node, vertex side)`` for every tree node, in a fixed order."""
        return [(w, self.below(w)) for w in self.nodes]

    def is_caterpillar(self) -> bool:
        inner = [w for w in self.parent if w not in self.leaf_map]
        adj = {w: set() for w in self.parent}
        for c, p in self.parent.items():
            if p is not None:
                adj[c].add(p)
                adj[p].add(c)
        spine = set(inner)
        if len(self.parent) <= 2:
            return True
        # the spine must be a path and every spine node must carry a leaf
        if any(len(adj[w] & spine) > 2 for w in spine):
            return False
        if len(spine) - 1 != sum(len(adj[w] & spine) for w in spine) // 2:
            return False
        return all(any(x in self.leaf_map for x in adj[w]) for w in spine)

    def is_full_binary(self) -> bool:
        """Every non-leaf node has degree 3 in the unrooted tree."""
        if len(self.parent) <= 2:
            return True
        deg = {w: 0 for w in self.parent}
        for c, p in self.parent.items():
            if p is not None:
                deg[c] += 1
                deg[p] += 1
        return all(deg[w] == 3 for w in self.parent if w not in self.leaf_map)


def default_root(rep: HRepresentation) -> str:
    if not rep.base.nodes:
        raise ValidationError("multigraph has no branching node")
    return min(rep.base.nodes)


def vertex_order(rep: HRepresentation, root: str | None = None) -> list:
    """Vertices by model distance to ``root``, ties by vertex id."""
    root = default_root(rep) if root is None else root
    if root not in rep.base.nodes:
        raise ValidationError(f"root {root!r} is not a branching node")
    dist = rep.subdivision.distances_from(root)
    inf = math.inf

    def key(v):
        return (min((dist.get(x, inf) for x in rep.models[v]), default=inf), vertex_key(v))

    return sorted(rep.vertices, key=key)


def caterpillar_from_order(order: list) -> Decomposition:
    n = len(order)
    if n < 2:
        raise ValidationError("a decomposition needs at least two vertices")
    leaf = {f"y{i}": order[i - 1] for i in range(1, n + 1)}
    parent: dict = {}
    if n == 2:
        # two nodes, both leaves; the first one doubles as the root
        parent["y1"] = None
        parent["y2"] = "y1"
        return Decomposition("y1", parent, leaf, tuple(order))
    top = f"x{n - 1}"
    for i in range(2, n):
        parent[f"x{i}"] = f"x{i + 1}" if i < n - 1 else None
    parent["y1"] = "x2"
    parent["y2"] = "x2"
    for i in range(3, n - 1):
        parent[f"y{i}"] = f"x{i}"
    parent[f"y{n - 1}"] = top
    parent[f"y{n}"] = top
    return Decomposition(top, parent, leaf, tuple(order))


def caterpillar_decomposition(rep: HRepresentation, root: str | None = None) -> Decomposition:
    if len(rep) < 2:
        raise ValidationError("a decomposition needs at least two vertices")
    rep.check()
    return caterpillar_from_order(vertex_order(rep, root))


# ------------------------------------------------------------- cut metrics


def _cut_masks(g: SimpleGraph, side, other):
    """Neighborhood masks of ``side`` over ``other``, with duplicate and empty rows in
    ``other`` dropped (they never change the values computed here)."""
    other = list(other)
    col_sig = {}
    for w in other:
        sig = frozenset(g.neighbors(w) & side)
        if sig:
            col_sig.setdefault(sig, w)
    cols = sorted_vertices(col_sig.values())
    pos = {w: i for i, w in enumerate(cols)}
    rows = []
    for v in sorted_vertices(side):
        m = 0
        for w in g.neighbors(v):
            if w in pos:
                m |= 1 << pos[w]
        rows.append(m)
    return rows, len(cols)


def cut_mim_exact(g: SimpleGraph, side, cap: int | None = None) -> int:
    """Maximum induced matching of the bipartite graph between ``side`` and the rest."""
    side = frozenset(side)
    if not side <= set(g.vertices):
        raise ValidationError("cut side is not a subset of the vertex set")
    cap = default_cap("mim") if cap is None else cap
    other = [v for v in g.vertices if v not in side]
    rows, ncols = _cut_masks(g, side, other)
    # twins on the row side are interchangeable in an induced matching
    rows = sorted({r for r in rows if r})
    if len(rows) + ncols > cap:
        raise SizeCapError("mim cut", len(rows) + ncols, cap)
    if not rows:
        return 0
    if len(rows) > ncols:
        # search over the smaller side
        trans = [sum(1 << i for i, r in enumerate(rows) if (r >> c) & 1) for c in range(ncols)]
        rows, ncols = sorted(set(trans)), len(rows)
    return kernels.max_induced_matching(np.array(rows, dtype=np.int64), ncols)


def cut_nec(g: SimpleGraph, side, d: int = 1, cap: int | None = None) -> int:
    """Number of classes of capped-neighborhood equivalence on subsets of ``side``."""
    if d < 1:
        raise ValidationError("d must be positive")
    side = frozenset(side)
    if not side <= set(g.vertices):
        raise ValidationError("cut side is not a subset of the vertex set")
    cap = default_cap("nec") if cap is None else cap
    other = [v for v in g.vertices if v not in side]
    rows, ncols = _cut_masks(g, side, other)
    rows = [r for r in rows if r]
    if d == 1:
        rows = sorted(set(rows))
    if len(rows) + ncols > cap:
        raise SizeCapError("nec cut", len(rows) + ncols, cap)
    if not rows:
        return 1
    return kernels.nec_count(np.array(rows, dtype=np.int64), ncols, d)


def boolean_width_of_cut(g: SimpleGraph, side, cap: int | None = None) -> float:
    return math.log2(cut_nec(g, side, 1, cap))


# -------------------------------------------------------- small equivalents


def neighborhood_across(g: SimpleGraph, vs, side) -> frozenset:
    out = set()
    for v in vs:
        out |= g.neighbors(v)
    return frozenset(out - set(side))


def protector_subset(rep: HRepresentation, side, subset) -> frozenset:
    """Pick, per edge path, the subset member reaching furthest right among those
    whose model leaves nothing of the other side to its left, and symmetrically."""
    side = frozenset(side)
    rest = [v for v in rep.vertices if v not in side]
    rest_nodes = set()
    for v in rest:
        rest_nodes |= rep.models[v]
    chosen = set()
    for eid, _, _ in rep.base.edges:
        path = rep.subdivision.path(eid)
        p = len(path)
        taken = [i for i, x in enumerate(path) if x in rest_nodes]
        first_rest = taken[0] if taken else p
        last_rest = taken[-1] if taken else -1
        best_left = best_right = None
        for v in sorted_vertices(subset):
            m = rep.models[v]
            i = 0
            while i < p:
                if path[i] not in m:
                    i += 1
                    continue
                j = i
                while j + 1 < p and path[j + 1] in m:
                    j += 1
                if first_rest >= i and (best_left is None or j > best_left[0]):
                    best_left = (j, v)
                if last_rest <= j and (best_right is None or i < best_right[0]):
                    best_right = (i, v)
                i = j + 1
        for pick in (best_left, best_right):
            if pick is not None:
                chosen.add(pick[1])
    return frozenset(chosen)


def smallest_equivalent_subset(g: SimpleGraph, side, subset, limit: int) -> frozenset | None:
    """Exhaustively find R within ``subset`` of size at most ``limit`` with the same
    neighborhood across the cut; None when there is none."""
    side = frozenset(side)
    target = neighborhood_across(g, subset, side)
    members = sorted_vertices(subset)
    for size in range(min(limit, len(members)) + 1):
        for combo in combinations(members, size):
            if neighborhood_across(g, combo, side) == target:
                return frozenset(combo)
    return None


# ------------------------------------------------------------------ report


@dataclass
class CutRecord:
    node: str
    size: int
    mim: int | None
    nec: dict = field(default_factory=dict)  # d -> (nec of side, nec of complement)
    boolw: float | None = None
    mim_ok: bool | None = None
    boolw_ok: bool | None = None
    nec_ok: bool | None = None
    verified: bool = True

    @property
    def ok(self) -> bool:
        return self.verified and all(f is not False for f in (self.mim_ok, self.boolw_ok, self.nec_ok))


@dataclass
class DecompositionReport:
    cuts: list
    num_edges_h: int
    n: int

    @property
    def max_mim(self) -> int:
        return max((c.mim for c in self.cuts if c.mim is not None), default=0)

    @property
    def max_boolw(self) -> float:
        return max((c.boolw for c in self.cuts if c.boolw is not None), default=0.0)

    def max_nec(self, d: int) -> int:
        return max((max(c.nec[d]) for c in self.cuts if d in c.nec), default=1)

    @property
    def mim_bound_ok(self) -> bool:
        return all(c.mim_ok is not False for c in self.cuts)

    @property
    def boolw_bound_ok(self) -> bool:
        return all(c.boolw_ok is not False for c in self.cuts)

    @property
    def nec_bound_ok(self) -> bool:
        return all(c.nec_ok is not False for c in self.cuts)

    @property
    def verified(self) -> bool:
        return all(c.verified for c in self.cuts)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cuts)


def decomposition_report(
    rep: HRepresentation, dec: Decomposition, ds=(1, 2), cap: int | None = None
) -> DecompositionReport:
    """Exact metrics for every cut plus the width bounds in integer form.

    The boolean-width bound ``log2 nec_1 <= 2|E(H)| log2 n`` is checked as
    ``nec_1 <= n ** (2|E(H)|)`` so no floating point rounding enters the verdict.
    """
    g = rep.graph
    n = g.n
    m_h = rep.base.num_edges
    width = 2 * m_h
    out = []
    for w, side in dec.cuts():
        rest = frozenset(g.vertices) - side
        rec = CutRecord(node=w, size=len(side), mim=None)
        try:
            rec.mim = cut_mim_exact(g, side, cap)
            for d in ds:
                rec.nec[d] = (cut_nec(g, side, d, cap), cut_nec(g, rest, d, cap))
        except SizeCapError:
            rec.verified = False
            out.append(rec)
            continue
        rec.mim_ok = rec.mim <= width
        if 1 in rec.nec:
            rec.boolw = math.log2(rec.nec[1][0])
            rec.boolw_ok = rec.nec[1][0] <= n**width
        rec.nec_ok = all(a <= n ** (d * rec.mim) and b <= n ** (d * rec.mim) for d, (a, b) in rec.nec.items())
        out.append(rec)
    return DecompositionReport(out, m_h, n)

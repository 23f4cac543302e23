"""Chordality testing and clique trees."""

from __future__ import annotations

from collections import deque

from ..errors import DisconnectedError, NotChordalError
from ..graph import SimpleGraph, sorted_vertices, vertex_key
from ..model import HRepresentation, MultiGraph, Subdivision


def maximum_cardinality_search(g: SimpleGraph) -> list:
    """Vertices in the reverse of an MCS visiting order (a PEO when g is chordal)."""
    weight = {v: 0 for v in g.vertices}
    visited = []
    left = set(g.vertices)
    while left:
        v = min(left, key=lambda u: (-weight[u], vertex_key(u)))
        left.remove(v)
        visited.append(v)
        for w in g.neighbors(v):
            if w in left:
                weight[w] += 1
    return visited[::-1]


def is_perfect_elimination_order(g: SimpleGraph, order: list) -> bool:
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in g.neighbors(v) if pos[w] > pos[v]]
        if not later:
            continue
        parent = min(later, key=pos.__getitem__)
        if not set(later) - {parent} <= g.neighbors(parent):
            return False
    return True


def chordless_cycle(g: SimpleGraph) -> list | None:
    """A chordless cycle of length at least four, or None if g is chordal."""
    for v in g.vertices:
        nbrs = sorted_vertices(g.neighbors(v))
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1 :]:
                if g.has_edge(a, b):
                    continue
                blocked = (g.neighbors(v) | {v}) - {a, b}
                prev = {a: None}
                queue = deque([a])
                while queue and b not in prev:
                    u = queue.popleft()
                    for w in sorted_vertices(g.neighbors(u)):
                        if w not in prev and w not in blocked:
                            prev[w] = u
                            queue.append(w)
                if b in prev:
                    path = [b]
                    while prev[path[-1]] is not None:
                        path.append(prev[path[-1]])
                    return [v] + path[::-1]
    return None


def is_chordal(g: SimpleGraph) -> bool:
    return is_perfect_elimination_order(g, maximum_cardinality_search(g))


def maximal_cliques(g: SimpleGraph) -> list:
    """Maximal cliques of a chordal graph, read off a perfect elimination order."""
    order = maximum_cardinality_search(g)
    pos = {v: i for i, v in enumerate(order)}
    cands = [frozenset({v} | {w for w in g.neighbors(v) if pos[w] > pos[v]}) for v in order]
    out = [c for c in cands if not any(c < d for d in cands)]
    uniq = sorted(set(out), key=lambda c: [vertex_key(v) for v in sorted_vertices(c)])
    return uniq


def clique_tree(g: SimpleGraph) -> HRepresentation:
    """T-representation on a clique tree: one node per maximal clique, models are the
    cliques containing each vertex.  The tree is a maximum-weight spanning tree of the
    clique intersection graph, which has the subtree property for chordal graphs."""
    if g.n == 0:
        raise DisconnectedError([])
    comps = g.components()
    if len(comps) > 1:
        raise DisconnectedError(comps)
    if not is_chordal(g):
        raise NotChordalError(chordless_cycle(g))
    cliques = maximal_cliques(g)
    names = [f"K{i + 1}" for i in range(len(cliques))]
    pairs = []
    for i in range(len(cliques)):
        for j in range(i + 1, len(cliques)):
            w = len(cliques[i] & cliques[j])
            if w:
                pairs.append((-w, i, j))
    pairs.sort()
    root = list(range(len(cliques)))

    def find(x):
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    edges = []
    for _, i, j in pairs:
        a, b = find(i), find(j)
        if a != b:
            root[a] = b
            edges.append((f"t{len(edges) + 1}", names[i], names[j]))
    models = {v: {names[i] for i, c in enumerate(cliques) if v in c} for v in g.vertices}
    rep = HRepresentation(Subdivision(MultiGraph(tuple(names), tuple(edges)), {}), models)
    rep.check()
    return rep

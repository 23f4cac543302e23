"""Maximum cliques through edge-interior vertices, and a vertex kernel for Clique.

A clique containing a vertex u whose model sits inside one edge path can be
assumed to have u with an inclusion-minimal model.  Every other member then
holds one of the two end nodes of that model, so the candidates split into two
cliques and the problem becomes a bipartite matching on the complement.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from . import kernels
from .config import default_cap
from .errors import SizeCapError, ValidationError
from .graph import SimpleGraph, sorted_vertices
from .model import HRepresentation

# ------------------------------------------------------------------ matching


def hopcroft_karp(left, right, adj: dict) -> dict:
    """Maximum matching as a dict containing both directions (left -> right, right -> left)."""
    left = list(left)
    right_set = set(right)
    match_l: dict = {u: None for u in left}
    match_r: dict = {v: None for v in right_set}
    inf = float("inf")

    def bfs():
        dist = {}
        queue = deque()
        for u in left:
            if match_l[u] is None:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = inf
        found = False
        while queue:
            u = queue.popleft()
            for v in adj.get(u, ()):
                w = match_r[v]
                if w is None:
                    found = True
                elif dist[w] == inf:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found, dist

    def dfs(u, dist):
        # iterative augmenting search along the BFS layers
        stack = [(u, iter(sorted_vertices(adj.get(u, ()))))]
        path = []
        while stack:
            node, it = stack[-1]
            advanced = False
            for v in it:
                w = match_r[v]
                if w is None:
                    path.append((node, v))
                    for a, b in path:
                        match_l[a] = b
                        match_r[b] = a
                    return True
                if dist.get(w) == dist[node] + 1:
                    path.append((node, v))
                    stack.append((w, iter(sorted_vertices(adj.get(w, ())))))
                    advanced = True
                    break
            if not advanced:
                dist[node] = inf
                stack.pop()
                if path:
                    path.pop()
        return False

    while True:
        found, dist = bfs()
        if not found:
            break
        for u in left:
            if match_l[u] is None:
                dfs(u, dist)
    out = {}
    for u, v in match_l.items():
        if v is not None:
            out[u] = v
            out[v] = u
    return out


def bipartite_max_matching(b: SimpleGraph, left) -> tuple:
    """``(size, pairs)`` for a bipartite graph with the given left side."""
    left = set(left)
    right = [v for v in b.vertices if v not in left]
    if not b.is_independent(left) or not b.is_independent(right):
        raise TypeError("graph is not bipartite with the given sides")
    adj = {u: b.neighbors(u) for u in left}
    m = hopcroft_karp(sorted_vertices(left), right, adj)
    pairs = sorted(((u, m[u]) for u in left if u in m), key=lambda p: str(p))
    return len(pairs), pairs


def konig_cover(left, right, adj: dict, matching: dict) -> set:
    """Minimum vertex cover from a maximum matching via alternating paths."""
    left = list(left)
    reach_l = {u for u in left if u not in matching}
    reach_r: set = set()
    queue = deque(reach_l)
    while queue:
        u = queue.popleft()
        for v in adj.get(u, ()):
            if v in reach_r:
                continue
            reach_r.add(v)
            w = matching.get(v)
            if w is not None and w not in reach_l:
                reach_l.add(w)
                queue.append(w)
    return (set(left) - reach_l) | reach_r


# ---------------------------------------------------------------- cobipartite


@dataclass(frozen=True)
class CobipartiteSlice:
    anchor: object
    first: object  # end node of the anchor model nearer the smaller path endpoint
    last: object
    side_one: frozenset  # models holding ``first``
    side_two: frozenset  # models holding ``last`` but not ``first``


def cobipartite_slice(rep: HRepresentation, u) -> CobipartiteSlice:
    cls = rep.classify(u)
    if cls.kind != "e":
        raise ValidationError(f"{u!r} is not an edge-interior vertex")
    path = rep.subdivision.path(cls.edge)
    pos = [i for i, x in enumerate(path) if x in rep.models[u]]
    first, last = path[min(pos)], path[max(pos)]
    one = rep.vertices_at(first)
    two = rep.vertices_at(last) - one
    return CobipartiteSlice(u, first, last, one, two)


def cobipartite_max_clique(g: SimpleGraph, one, two) -> frozenset:
    """Largest clique inside two given cliques: the complement of a minimum cover of
    the bipartite non-adjacency graph between them."""
    one, two = sorted_vertices(one), sorted_vertices(two)
    adj = {u: [v for v in two if not g.has_edge(u, v)] for u in one}
    m = hopcroft_karp(one, two, adj)
    cover = konig_cover(one, two, adj, m)
    return frozenset(v for v in one + two if v not in cover)


def max_clique_with_e_vertex(rep: HRepresentation) -> frozenset:
    """A maximum clique among those containing some edge-interior vertex; empty if none."""
    g = rep.graph
    best: frozenset = frozenset()
    for u in rep.e_vertices():
        sl = cobipartite_slice(rep, u)
        if not (g.is_clique(sl.side_one) and g.is_clique(sl.side_two)):
            raise AssertionError("slice side is not a clique")
        k = cobipartite_max_clique(g, sl.side_one, sl.side_two) | {u}
        if len(k) > len(best):
            best = k
    return best


# -------------------------------------------------------------------- oracle


def clique_oracle(g: SimpleGraph, cap: int | None = None) -> tuple:
    """``(omega, clique)`` by branch and bound."""
    cap = default_cap("clique") if cap is None else cap
    if g.n > cap:
        raise SizeCapError("clique oracle", g.n, cap)
    if g.n == 0:
        return 0, frozenset()
    size, mask = kernels.max_clique(g.bitmasks())
    return int(size), frozenset(g.vertices_of(int(mask)))


def e_clique_oracle(rep: HRepresentation, cap: int | None = None) -> int:
    """Largest clique through an edge-interior vertex, by exhaustive search per vertex."""
    g = rep.graph
    best = 0
    for u in rep.e_vertices():
        sub = g.induced_subgraph(g.neighbors(u))
        best = max(best, 1 + clique_oracle(sub, cap)[0])
    return best


# -------------------------------------------------------------------- kernel


@dataclass
class KernelOutput:
    verdict: str  # "yes" or "reduced"
    certificate: frozenset | None = None
    reduced: SimpleGraph | None = None
    bound: int = 0

    @property
    def size(self) -> int:
        return self.reduced.n if self.reduced is not None else 0


def clique_kernel(rep: HRepresentation, k: int) -> KernelOutput:
    if k < 1:
        raise ValidationError("k must be positive")
    bound = (k - 1) * len(rep.base.nodes)
    through_edge = max_clique_with_e_vertex(rep)
    if len(through_edge) >= k:
        return KernelOutput("yes", through_edge, None, bound)
    for x in sorted(rep.base.nodes):
        at = rep.vertices_at(x)
        if len(at) >= k:
            return KernelOutput("yes", frozenset(at), None, bound)
    reduced = rep.graph.remove_vertices(rep.e_vertices())
    if reduced.n > bound:
        raise AssertionError("kernel exceeds its size bound")
    return KernelOutput("reduced", None, reduced, bound)


def solve_clique(rep: HRepresentation, k: int, cap: int | None = None) -> tuple:
    """``(verdict, certificate)`` using the kernel, then the oracle on what remains."""
    out = clique_kernel(rep, k)
    if out.verdict == "yes":
        return True, out.certificate
    omega, cl = clique_oracle(out.reduced, cap)
    return omega >= k, cl if omega >= k else None


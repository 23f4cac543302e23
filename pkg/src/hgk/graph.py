"""Plain undirected graphs with hashable vertex ids."""

from __future__ import annotations

from collections import deque
from typing import Hashable, Iterable, Iterator

import numpy as np

Vertex = Hashable


def vertex_key(v):
    """Sort key putting ints before strings and comparing within each kind."""
    if isinstance(v, (int, np.integer)):
        return (0, int(v), "")
    return (1, 0, str(v))


def sorted_vertices(vs: Iterable[Vertex]) -> list:
    return sorted(vs, key=vertex_key)


class SimpleGraph:
    """Immutable simple graph: symmetric, irreflexive adjacency."""

    __slots__ = ("_vertices", "_adj", "_index")

    def __init__(self, vertices: Iterable[Vertex], edges: Iterable[tuple] = ()):
        verts = sorted_vertices(set(vertices))
        adj: dict = {v: set() for v in verts}
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop on {u!r}")
            if u not in adj or v not in adj:
                raise ValueError(f"edge ({u!r}, {v!r}) uses an undeclared vertex")
            adj[u].add(v)
            adj[v].add(u)
        self._vertices = tuple(verts)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        self._index = {v: i for i, v in enumerate(self._vertices)}

    @classmethod
    def from_adjacency(cls, adjacency: dict) -> "SimpleGraph":
        edges = [(u, v) for u, ns in adjacency.items() for v in ns]
        return cls(adjacency.keys(), edges)

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return sum(len(ns) for ns in self._adj.values()) // 2

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator:
        return iter(self._vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._adj == other._adj

    def __hash__(self):
        return hash((self._vertices, tuple(self.edges())))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, m={self.m})"

    def neighbors(self, v) -> frozenset:
        return self._adj[v]

    def closed_neighborhood(self, v) -> frozenset:
        return self._adj[v] | {v}

    def degree(self, v) -> int:
        return len(self._adj[v])

    def has_edge(self, u, v) -> bool:
        return v in self._adj.get(u, ())

    def index(self, v) -> int:
        return self._index[v]

    def edges(self) -> list:
        out = []
        for u in self._vertices:
            iu = self._index[u]
            for v in self._adj[u]:
                if self._index[v] > iu:
                    out.append((u, v))
        out.sort(key=lambda e: (self._index[e[0]], self._index[e[1]]))
        return out

    def induced_subgraph(self, vs: Iterable[Vertex]) -> "SimpleGraph":
        keep = set(vs)
        return SimpleGraph(keep, [(u, v) for u, v in self.edges() if u in keep and v in keep])

    def remove_vertices(self, vs: Iterable[Vertex]) -> "SimpleGraph":
        drop = set(vs)
        return self.induced_subgraph(v for v in self._vertices if v not in drop)

    def add_vertices(self, vs: Iterable[Vertex]) -> "SimpleGraph":
        return SimpleGraph(list(self._vertices) + list(vs), self.edges())

    def complement(self) -> "SimpleGraph":
        vs = self._vertices
        return SimpleGraph(
            vs,
            [(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs)) if vs[j] not in self._adj[vs[i]]],
        )

    def components(self, within: Iterable[Vertex] | None = None) -> list[frozenset]:
        allowed = set(self._vertices if within is None else within)
        seen: set = set()
        comps = []
        for s in self._vertices:
            if s not in allowed or s in seen:
                continue
            comp = {s}
            seen.add(s)
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if w in allowed and w not in seen:
                        seen.add(w)
                        comp.add(w)
                        queue.append(w)
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def neighborhood_of_set(self, vs: Iterable[Vertex]) -> frozenset:
        vs = set(vs)
        out = set()
        for v in vs:
            out |= self._adj[v]
        return frozenset(out - vs)

    def is_dominating(self, dset: Iterable[Vertex]) -> bool:
        dset = set(dset)
        return all(v in dset or self._adj[v] & dset for v in self._vertices)

    def is_clique(self, vs: Iterable[Vertex]) -> bool:
        vs = list(vs)
        return all(vs[j] in self._adj[vs[i]] for i in range(len(vs)) for j in range(i + 1, len(vs)))

    def is_independent(self, vs: Iterable[Vertex]) -> bool:
        vs = list(vs)
        return all(vs[j] not in self._adj[vs[i]] for i in range(len(vs)) for j in range(i + 1, len(vs)))

    def bitmasks(self) -> np.ndarray:
        """Open-neighborhood masks indexed like ``vertices`` (requires n <= 63)."""
        if self.n > 63:
            raise ValueError("bitmask encoding needs at most 63 vertices")
        out = np.zeros(self.n, dtype=np.int64)
        for v, i in self._index.items():
            m = 0
            for w in self._adj[v]:
                m |= 1 << self._index[w]
            out[i] = m
        return out

    def mask_of(self, vs: Iterable[Vertex]) -> int:
        m = 0
        for v in vs:
            m |= 1 << self._index[v]
        return m

    def vertices_of(self, mask: int) -> list:
        return [v for i, v in enumerate(self._vertices) if (mask >> i) & 1]

"""Multigraphs, subdivisions and H-representations.

Nodes of a subdivision come in two kinds.  Branching nodes keep their name
from the base multigraph (a ``str``); subdivision nodes are ``(edge_id, pos)``
tuples with ``1 <= pos <= sub_count[edge_id]``, counted from the
lexicographically smaller endpoint of the edge.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Mapping, NamedTuple, Union

from .errors import ValidationError
from .graph import SimpleGraph, sorted_vertices, vertex_key

Node = Union[str, tuple]


def is_subdivision_node(node: Node) -> bool:
    return isinstance(node, tuple)


def node_key(node: Node):
    if isinstance(node, tuple):
        return (1, node[0], node[1])
    return (0, node, 0)


def sorted_nodes(nodes: Iterable[Node]) -> list:
    return sorted(nodes, key=node_key)


def format_node(node: Node) -> str:
    if isinstance(node, tuple):
        return f"e:{node[0]}:{node[1]}"
    return str(node)


@dataclass(frozen=True, eq=True)
class MultiGraph:
    """Loopless multigraph; parallel edges are told apart by edge id."""

    nodes: tuple
    edges: tuple  # of (edge_id, endpoint_a, endpoint_b)

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        if len(set(self.nodes)) != len(self.nodes):
            raise ValidationError("duplicate node id")
        declared = set(self.nodes)
        seen = set()
        for eid, a, b in self.edges:
            if eid in seen:
                raise ValidationError(f"duplicate edge id {eid!r}")
            seen.add(eid)
            if a not in declared or b not in declared:
                raise ValidationError(f"edge {eid!r} uses an undeclared node")
            if a == b:
                raise ValidationError(f"edge {eid!r} is a loop")

    def __hash__(self):
        return hash((self.nodes, self.edges))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def _edge_map(self) -> dict:
        return {eid: (a, b) for eid, a, b in self.edges}

    def endpoints(self, eid: str) -> tuple:
        return self._edge_map[eid]

    def other_end(self, eid: str, node: str) -> str:
        a, b = self._edge_map[eid]
        return b if node == a else a

    @cached_property
    def _incidence(self) -> dict:
        inc = {v: [] for v in self.nodes}
        for eid, a, b in self.edges:
            inc[a].append(eid)
            inc[b].append(eid)
        return inc

    def incident_edges(self, node: str) -> list:
        return list(self._incidence[node])

    def degree(self, node: str) -> int:
        return len(self._incidence[node])

    def leaves(self) -> list:
        return sorted(v for v in self.nodes if self.degree(v) == 1)

    def is_connected(self) -> bool:
        if not self.nodes:
            return True
        seen = {self.nodes[0]}
        queue = deque(seen)
        while queue:
            u = queue.popleft()
            for eid in self._incidence[u]:
                w = self.other_end(eid, u)
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == len(self.nodes)

    def is_tree(self) -> bool:
        return len(self.nodes) >= 1 and len(self.edges) == len(self.nodes) - 1 and self.is_connected()


@dataclass(frozen=True, eq=True)
class Subdivision:
    """A multigraph with ``sub_count[e]`` degree-2 nodes placed on each edge."""

    base: MultiGraph
    sub_count: Mapping = field(default_factory=dict)

    def __post_init__(self):
        counts = {eid: int(self.sub_count.get(eid, 0)) for eid, _, _ in self.base.edges}
        extra = set(self.sub_count) - set(counts)
        if extra:
            raise ValidationError(f"sub_count names unknown edges {sorted(extra)}")
        if any(c < 0 for c in counts.values()):
            raise ValidationError("negative subdivision count")
        object.__setattr__(self, "sub_count", counts)

    def __hash__(self):
        return hash((self.base, tuple(sorted(self.sub_count.items()))))

    def path(self, eid: str) -> list:
        """Nodes of the path for ``eid`` from its smaller endpoint to its larger one."""
        a, b = self.base.endpoints(eid)
        lo, hi = (a, b) if a <= b else (b, a)
        return [lo] + [(eid, i) for i in range(1, self.sub_count[eid] + 1)] + [hi]

    def path_from(self, eid: str, start: str) -> list:
        p = self.path(eid)
        return p if p[0] == start else p[::-1]

    def path_edges(self, eid: str) -> list:
        p = self.path(eid)
        return [(p[i], p[i + 1]) for i in range(len(p) - 1)]

    @cached_property
    def nodes(self) -> tuple:
        out = list(self.base.nodes)
        for eid, _, _ in self.base.edges:
            out.extend((eid, i) for i in range(1, self.sub_count[eid] + 1))
        return tuple(out)

    @cached_property
    def _node_set(self) -> frozenset:
        return frozenset(self.nodes)

    def __contains__(self, node) -> bool:
        try:
            return node in self._node_set
        except TypeError:
            return False

    @cached_property
    def adjacency(self) -> dict:
        adj = {v: [] for v in self.nodes}
        for eid, _, _ in self.base.edges:
            for u, w in self.path_edges(eid):
                adj[u].append(w)
                adj[w].append(u)
        return adj

    def neighbors(self, node: Node) -> list:
        return self.adjacency[node]

    def is_branching(self, node: Node) -> bool:
        return not isinstance(node, tuple)

    def edge_of(self, node: Node) -> str:
        return node[0]

    def edges(self) -> list:
        out = []
        for eid, _, _ in self.base.edges:
            out.extend(self.path_edges(eid))
        return out

    def distances_from(self, source: Node) -> dict:
        dist = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def is_connected_set(self, nodes: Iterable[Node]) -> bool:
        nodes = set(nodes)
        if not nodes:
            return False
        start = next(iter(nodes))
        seen = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if w in nodes and w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == len(nodes)

    def border_edges(self, nodes: Iterable[Node]) -> list:
        """Edges with exactly one endpoint in ``nodes``."""
        nodes = set(nodes)
        return [(u, w) for u, w in self.edges() if (u in nodes) != (w in nodes)]


class VertexClass(NamedTuple):
    kind: str  # "U" or "e"
    branching: frozenset  # the set U for U-vertices, empty otherwise
    edge: str | None  # the edge for e-vertices


@dataclass(frozen=True, eq=True)
class HRepresentation:
    """A family of node sets of a subdivision, one per vertex of G."""

    subdivision: Subdivision
    models: Mapping

    def __post_init__(self):
        object.__setattr__(self, "models", {v: frozenset(m) for v, m in self.models.items()})

    def __hash__(self):
        return hash((self.subdivision, tuple((v, tuple(sorted_nodes(m))) for v, m in self.items())))

    @property
    def base(self) -> MultiGraph:
        return self.subdivision.base

    @cached_property
    def vertices(self) -> tuple:
        return tuple(sorted_vertices(self.models))

    def __len__(self) -> int:
        return len(self.models)

    def items(self):
        return [(v, self.models[v]) for v in self.vertices]

    def model(self, v: Hashable) -> frozenset:
        return self.models[v]

    def violations(self) -> list:
        return validate_representation(self)

    def check(self) -> None:
        bad = self.violations()
        if bad:
            raise ValidationError("; ".join(bad))

    @cached_property
    def graph(self) -> SimpleGraph:
        return build_intersection_graph(self)

    def vertices_at(self, node: Node) -> frozenset:
        """The set of vertices whose model contains ``node``."""
        return self._node_index.get(node, frozenset())

    @cached_property
    def _node_index(self) -> dict:
        idx: dict = {}
        for v, m in self.models.items():
            for x in m:
                idx.setdefault(x, set()).add(v)
        return {x: frozenset(vs) for x, vs in idx.items()}

    def classify(self, v) -> VertexClass:
        return classify_vertex(self, v)

    def e_vertices(self, eid: str | None = None) -> list:
        out = []
        for v in self.vertices:
            c = classify_vertex(self, v)
            if c.kind == "e" and (eid is None or c.edge == eid):
                out.append(v)
        return out

    def restrict(self, vs: Iterable[Hashable]) -> "HRepresentation":
        vs = set(vs)
        return HRepresentation(self.subdivision, {v: m for v, m in self.models.items() if v in vs})


def validate_representation(rep: HRepresentation) -> list:
    """Return human-readable violations; an empty list means the representation is valid."""
    out = []
    sub = rep.subdivision
    for v in rep.vertices:
        m = rep.models[v]
        if not m:
            out.append(f"vertex {v!r}: empty model")
            continue
        unknown = [x for x in m if x not in sub]
        if unknown:
            out.append(f"vertex {v!r}: unknown node {format_node(sorted(unknown, key=repr)[0])}")
            continue
        if not sub.is_connected_set(m):
            out.append(f"vertex {v!r}: disconnected model")
    return out


def build_intersection_graph(rep: HRepresentation) -> SimpleGraph:
    """Graph on the model owners with an edge whenever two models share a node."""
    bad = validate_representation(rep)
    if bad:
        raise ValidationError(bad[0])
    edges = set()
    for node, owners in rep._node_index.items():
        owners = sorted(owners, key=vertex_key)
        for i in range(len(owners)):
            for j in range(i + 1, len(owners)):
                edges.add((owners[i], owners[j]))
    return SimpleGraph(rep.vertices, edges)


def classify_vertex(rep: HRepresentation, v: Hashable) -> VertexClass:
    """U-vertex with U = branching nodes in the model, or e-vertex of its edge."""
    m = rep.models[v]
    branching = frozenset(x for x in m if not isinstance(x, tuple))
    if branching:
        return VertexClass("U", branching, None)
    edges = {x[0] for x in m}
    if len(edges) != 1:
        raise ValidationError(f"vertex {v!r}: model without branching nodes spans several edges")
    return VertexClass("e", frozenset(), next(iter(edges)))


def refine_representation(rep: HRepresentation) -> HRepresentation:
    """Subdivide every edge once more and lift each model to the finer subdivision.

    An old node at position ``pos`` moves to ``2 * pos``; a model gains the new
    midpoint of every edge it used (both endpoints inside the model).
    """
    sub = rep.subdivision
    finer = Subdivision(sub.base, {eid: 2 * c + 1 for eid, c in sub.sub_count.items()})

    def lift(x):
        return (x[0], 2 * x[1]) if isinstance(x, tuple) else x

    models = {}
    for v, m in rep.models.items():
        new = {lift(x) for x in m}
        for eid, _, _ in sub.base.edges:
            path = sub.path(eid)
            for i in range(len(path) - 1):
                if path[i] in m and path[i + 1] in m:
                    new.add((eid, 2 * i + 1))
        models[v] = new
    return HRepresentation(finer, models)


def make_representation(nodes, edges, models, sub_count=None) -> HRepresentation:
    """Convenience constructor: ``edges`` as ``(eid, a, b)`` or ``(eid, a, b, count)``."""
    plain = []
    counts = dict(sub_count or {})
    for e in edges:
        if len(e) == 4:
            counts[e[0]] = e[3]
        plain.append(tuple(e[:3]))
    return HRepresentation(Subdivision(MultiGraph(tuple(nodes), tuple(plain)), counts), models)

"""Reshaping T-representations: dissolving, contracting and trimming tree nodes."""

from __future__ import annotations

from ..errors import ValidationError
from ..model import HRepresentation, MultiGraph, Subdivision


class TreeRequiredError(ValidationError, TypeError):
    """The base multigraph of a representation is not a tree."""


def require_tree(rep: HRepresentation) -> None:
    if not rep.base.is_tree():
        raise TreeRequiredError("base multigraph must be a tree")


def rebuild(rep: HRepresentation, node_map: dict, edge_plan: list, drop_vertices=()) -> HRepresentation:
    """Assemble a new representation from explicit edge paths.

    ``node_map`` sends old nodes to new branching node names; ``edge_plan``
    holds ``(edge_id, a, b, interior)`` where ``interior`` lists old nodes in
    order from new endpoint ``a`` to new endpoint ``b``.  Old nodes reached by
    neither are removed from every model.
    """
    nodes = set(node_map.values())
    for _, a, b, _ in edge_plan:
        nodes.add(a)
        nodes.add(b)
    base = MultiGraph(tuple(sorted(nodes)), tuple((eid, a, b) for eid, a, b, _ in edge_plan))
    sub = Subdivision(base, {eid: len(inner) for eid, _, _, inner in edge_plan})
    where = dict(node_map)
    for eid, a, b, inner in edge_plan:
        n = len(inner)
        for k, old in enumerate(inner):
            where[old] = (eid, k + 1) if a <= b else (eid, n - k)
    drop = set(drop_vertices)
    models = {}
    for v, m in rep.models.items():
        if v in drop:
            continue
        models[v] = {where[x] for x in m if x in where}
    return HRepresentation(sub, models)


def _interior(rep: HRepresentation, eid: str, start: str) -> list:
    return rep.subdivision.path_from(eid, start)[1:-1]


def dissolve_degree_two(rep: HRepresentation) -> HRepresentation:
    """Merge the two edges at every degree-2 tree node into one longer path."""
    require_tree(rep)
    while True:
        base = rep.base
        target = next((x for x in sorted(base.nodes) if base.degree(x) == 2), None)
        if target is None:
            return rep
        e1, e2 = sorted(base.incident_edges(target))
        a = base.other_end(e1, target)
        b = base.other_end(e2, target)
        inner = list(reversed(_interior(rep, e1, target))) + [target] + _interior(rep, e2, target)
        node_map = {x: x for x in base.nodes if x != target}
        specs = []
        for eid, p, q in base.edges:
            if eid in (e1, e2):
                continue
            specs.append((eid, p, q, _interior(rep, eid, p)))
        specs.append((f"{e1}.{e2}", a, b, inner))
        rep = rebuild(rep, node_map, specs)


def edge_vertices(rep: HRepresentation, eid: str) -> list:
    """Vertices whose model lies inside the interior of the path for ``eid``."""
    return rep.e_vertices(eid)


def contract_tree_edges(rep: HRepresentation, eids, delete_edge_vertices: bool = True) -> HRepresentation:
    """Contract a batch of tree edges.

    Each contracted component of tree nodes becomes one node named after its
    smallest member.  Edge-interior vertices of contracted edges are deleted,
    interior path nodes vanish, and any model touching the component now holds
    the merged node.
    """
    require_tree(rep)
    eids = set(eids)
    base = rep.base
    unknown = eids - {e for e, _, _ in base.edges}
    if unknown:
        raise ValidationError(f"unknown tree edges {sorted(unknown)}")
    parent = {x: x for x in base.nodes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for eid in sorted(eids):
        a, b = base.endpoints(eid)
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict = {}
    for x in base.nodes:
        groups.setdefault(find(x), []).append(x)
    name = {x: min(groups[find(x)]) for x in base.nodes}
    node_map = dict(name)
    drop = set()
    specs = []
    for eid, a, b in base.edges:
        inner = _interior(rep, eid, a)
        if eid in eids:
            for old in inner:
                node_map[old] = name[a]
            if delete_edge_vertices:
                drop.update(rep.e_vertices(eid))
        else:
            specs.append((eid, name[a], name[b], inner))
    return rebuild(rep, node_map, specs, drop)


def contract_tree_edge(rep: HRepresentation, eid: str) -> HRepresentation:
    return contract_tree_edges(rep, [eid])


def trim_uncovered_leaves(rep: HRepresentation) -> HRepresentation:
    """Cut away tree leaves no model reaches, keeping every covered path node."""
    require_tree(rep)
    while True:
        base = rep.base
        if len(base.nodes) <= 1:
            return rep
        covered = set()
        for m in rep.models.values():
            covered |= m
        leaf = next((x for x in sorted(base.nodes) if base.degree(x) == 1 and x not in covered), None)
        if leaf is None:
            return rep
        (eid,) = base.incident_edges(leaf)
        anchor = base.other_end(eid, leaf)
        path = rep.subdivision.path_from(eid, anchor)
        last = max((k for k in range(1, len(path) - 1) if path[k] in covered), default=None)
        node_map = {x: x for x in base.nodes if x != leaf}
        specs = [(e, p, q, _interior(rep, e, p)) for e, p, q in base.edges if e != eid]
        if last is not None:
            new_leaf = f"{path[last][0]}.{path[last][1]}"
            while new_leaf in node_map:
                new_leaf += "_"
            node_map[path[last]] = new_leaf
            specs.append((eid, anchor, new_leaf, path[1:last]))
        rep = rebuild(rep, node_map, specs)


def is_nice(rep: HRepresentation) -> bool:
    return all(sum(1 for x in m if not isinstance(x, tuple)) <= 1 for m in rep.models.values())

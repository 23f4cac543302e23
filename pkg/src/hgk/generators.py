"""Instance generators: random H-graphs, T-graphs, theta graphs and the hardness reductions.

Randomness comes from numpy's Philox bit generator.  ``derive_seed`` splits one
master seed into independent per-instance seeds so corpora are reproducible
regardless of the order in which instances are built.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .config import default_cap
from .errors import SizeCapError, ValidationError
from .graph import SimpleGraph
from .model import HRepresentation, MultiGraph, Subdivision

# ---------------------------------------------------------------- randomness


def derive_seed(seed: int, *keys: int) -> int:
    ss = np.random.SeedSequence([int(seed) & 0xFFFFFFFFFFFFFFFF, *[int(k) for k in keys]])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def make_rng(seed: int, *keys: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(derive_seed(seed, *keys)))


# ------------------------------------------------------------ random H-graphs


@dataclass(frozen=True)
class RandomParams:
    sub_min: int = 0
    sub_max: int = 3
    model_min: int = 1
    model_max: int = 4


def random_model(sub: Subdivision, rng: np.random.Generator, size: int) -> set:
    """Connected node set grown from a random start by random frontier steps."""
    nodes = sub.nodes
    start = nodes[int(rng.integers(len(nodes)))]
    model = {start}
    frontier = sorted(set(sub.neighbors(start)), key=repr)
    while len(model) < size and frontier:
        x = frontier[int(rng.integers(len(frontier)))]
        model.add(x)
        frontier = sorted({w for u in model for w in sub.neighbors(u)} - model, key=repr)
    return model


def random_hgraph(
    h: MultiGraph, n: int, seed: int, params: RandomParams | None = None, sub_counts: dict | None = None
) -> HRepresentation:
    params = params or RandomParams()
    rng = make_rng(seed)
    counts = dict(sub_counts) if sub_counts is not None else {}
    for eid, _, _ in h.edges:
        if eid not in counts:
            counts[eid] = int(rng.integers(params.sub_min, params.sub_max + 1))
    sub = Subdivision(h, counts)
    models = {}
    for i in range(n):
        size = int(rng.integers(params.model_min, params.model_max + 1))
        models[f"v{i}"] = random_model(sub, rng, size)
    rep = HRepresentation(sub, models)
    rep.check()
    return rep


def single_edge() -> MultiGraph:
    return MultiGraph(("a", "b"), (("e1", "a", "b"),))


def double_edge() -> MultiGraph:
    return MultiGraph(("a", "b"), (("e1", "a", "b"), ("e2", "a", "b")))


def random_small_multigraph(num_edges: int, rng: np.random.Generator) -> MultiGraph:
    """Connected multigraph on two or three nodes with the given number of edges."""
    if num_edges < 1:
        raise ValidationError("need at least one edge")
    k = 2 if num_edges == 1 else int(rng.integers(2, 4))
    nodes = tuple(chr(ord("a") + i) for i in range(k))
    edges = []
    for i in range(1, k):
        edges.append((f"e{i}", nodes[int(rng.integers(i))], nodes[i]))
    while len(edges) < num_edges:
        a, b = rng.choice(k, size=2, replace=False)
        edges.append((f"e{len(edges) + 1}", nodes[min(a, b)], nodes[max(a, b)]))
    return MultiGraph(nodes, tuple(edges[:num_edges]))


def random_tree(max_leaves: int, rng: np.random.Generator, max_leg: int = 2) -> MultiGraph:
    """A spider: a center with 1 to ``max_leaves`` legs (so at most that many leaves)."""
    top = max(1, max_leaves)
    # favour the most legs allowed so that branching actually shows up
    legs = top if rng.random() < 0.6 else int(rng.integers(1, top + 1))
    nodes = ["a"]
    edges = []
    for _ in range(legs):
        prev = "a"
        for _ in range(int(rng.integers(1, max_leg + 1))):
            x = f"b{len(nodes)}"
            nodes.append(x)
            edges.append((f"f{len(edges) + 1}", prev, x))
            prev = x
    return MultiGraph(tuple(nodes), tuple(edges))


TREE_PARAMS = RandomParams(sub_min=1, sub_max=5, model_min=2, model_max=4)


def random_tgraph(
    seed: int, n: int, max_leaves: int = 3, connected: bool = True, params: RandomParams | None = None
) -> HRepresentation:
    """Random T-graph on a spider with at most ``max_leaves`` leaves.

    With ``connected`` samples are redrawn until the graph is connected; after many
    misses new models start inside the area already covered, which forces it."""
    params = params or TREE_PARAMS
    for attempt in range(400):
        rng = make_rng(seed, attempt)
        tree = random_tree(max_leaves, rng)
        counts = {eid: int(rng.integers(params.sub_min, params.sub_max + 1)) for eid, _, _ in tree.edges}
        sub = Subdivision(tree, counts)
        anchored = connected and attempt >= 200
        covered: list = []
        models = {}
        for i in range(n):
            size = int(rng.integers(params.model_min, params.model_max + 1))
            if anchored and covered:
                m = _grow(sub, rng, covered[int(rng.integers(len(covered)))], size)
            else:
                m = random_model(sub, rng, size)
            models[f"v{i}"] = m
            covered = sorted(set(covered) | m, key=repr)
        rep = HRepresentation(sub, models)
        if not connected or rep.graph.is_connected():
            rep.check()
            return rep
    raise ValidationError("could not sample a connected T-graph")


def _grow(sub, rng, start, size):
    m = {start}
    while len(m) < size:
        frontier = sorted({w for u in m for w in sub.neighbors(u)} - m, key=repr)
        if not frontier:
            break
        m.add(frontier[int(rng.integers(len(frontier)))])
    return m


# ------------------------------------------------------------------- theta


def theta_instance(r: int, k: int) -> HRepresentation:
    """The graph made of two vertices joined by r internally disjoint paths with k inner
    vertices each.  Every path is subdivided 2k+1 times so that a vertex owns its own
    node plus the two half-edge nodes next to it, which makes the intersection graph
    equal to the subdivided multigraph itself."""
    if r < 1 or k < 1:
        raise ValidationError("r and k must be positive")
    h = MultiGraph(("a", "b"), tuple((f"e{j}", "a", "b") for j in range(1, r + 1)))
    sub = Subdivision(h, {f"e{j}": 2 * k + 1 for j in range(1, r + 1)})
    models = {"a": {"a"}, "b": {"b"}}
    for j in range(1, r + 1):
        eid = f"e{j}"
        models["a"].add((eid, 1))
        models["b"].add((eid, 2 * k + 1))
        for pos in range(1, k + 1):
            models[f"{eid}_{pos}"] = {(eid, 2 * pos - 1), (eid, 2 * pos), (eid, 2 * pos + 1)}
    return HRepresentation(sub, models)


# ----------------------------------------------------- multicolored problems


@dataclass
class MulticolorInstance:
    g: SimpleGraph
    parts: list  # lists of vertices, one per color class

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def p(self) -> int:
        return len(self.parts[0]) if self.parts else 0


def pad_parts(g: SimpleGraph, parts: list) -> MulticolorInstance:
    """Equalize part sizes by adding isolated vertices."""
    p = max(len(x) for x in parts)
    extra = []
    new_parts = []
    for i, part in enumerate(parts, start=1):
        part = list(part)
        c = 0
        while len(part) < p:
            c += 1
            name = f"pad{i}_{c}"
            part.append(name)
            extra.append(name)
        new_parts.append(part)
    if extra:
        warnings.warn(f"padded parts with {len(extra)} isolated vertices", stacklevel=2)
        g = g.add_vertices(extra)
    return MulticolorInstance(g, new_parts)


def random_multicolored(k: int, p: int, seed: int, density: float | None = None) -> MulticolorInstance:
    rng = make_rng(seed)
    if density is None:
        density = float(rng.uniform(0.2, 0.9))
    parts = [[f"v{i}_{s}" for s in range(1, p + 1)] for i in range(1, k + 1)]
    edges = []
    for i in range(k):
        for j in range(i + 1, k):
            for a in parts[i]:
                for b in parts[j]:
                    if rng.random() < density:
                        edges.append((a, b))
    return MulticolorInstance(SimpleGraph([v for part in parts for v in part], edges), parts)


def _check_tuples(inst: MulticolorInstance, cap):
    cap = default_cap("multicolored") if cap is None else cap
    total = inst.p**inst.k
    if total > cap:
        raise SizeCapError("multicolored tuples", total, cap)


def multicolored_clique_oracle(inst: MulticolorInstance, cap: int | None = None):
    """A tuple forming a clique with one vertex per part, or None."""
    _check_tuples(inst, cap)
    for combo in product(*inst.parts):
        if inst.g.is_clique(combo):
            return combo
    return None


def multicolored_is_oracle(inst: MulticolorInstance, cap: int | None = None):
    _check_tuples(inst, cap)
    for combo in product(*inst.parts):
        if inst.g.is_independent(combo):
            return combo
    return None


# ---------------------------------------------------------------- reductions


@dataclass
class ReductionOutput:
    rep: HRepresentation
    target: int
    roles: dict = field(default_factory=dict)  # vertex -> role tuple


def hardness_multigraph(k: int, p: int) -> Subdivision:
    """Nodes u1..uk and w{i}_{j}; two parallel edges from each of u_i and u_j to w{i}_{j}."""
    nodes = [f"u{i}" for i in range(1, k + 1)]
    edges = []
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            w = f"w{i}_{j}"
            nodes.append(w)
            for a, b in ((i, j), (j, i)):
                edges.append((f"x_{a}_{b}", f"u{a}", w))
                edges.append((f"y_{a}_{b}", f"u{a}", w))
    h = MultiGraph(tuple(nodes), tuple(edges))
    return Subdivision(h, {eid: p for eid, _, _ in edges})


def _track(kind: str, a: int, b: int, idx: int, p: int):
    """Node at index ``idx`` (0..p+1) on the x- or y-path from u_a towards the shared w-node."""
    if idx == 0:
        return f"u{a}"
    if idx == p + 1:
        return f"w{min(a, b)}_{max(a, b)}"
    return (f"{kind}_{a}_{b}", idx)


def _span(kind, a, b, lo, hi, p):
    return {_track(kind, a, b, t, p) for t in range(lo, hi + 1)}


def _require(inst: MulticolorInstance):
    if inst.k < 2:
        raise ValidationError("reductions need k >= 2")
    if len({len(x) for x in inst.parts}) != 1:
        raise ValidationError("parts must have equal size (use pad_parts)")


def reduce_mcc_to_is(inst: MulticolorInstance) -> ReductionOutput:
    """Multicolored clique instance to an independent-set instance with target k(k+1)/2."""
    _require(inst)
    k, p = inst.k, inst.p
    sub = hardness_multigraph(k, p)
    index = {v: (i + 1, s + 1) for i, part in enumerate(inst.parts) for s, v in enumerate(part)}
    models, roles = {}, {}
    for i in range(1, k + 1):
        for s in range(1, p + 1):
            m = set()
            for j in range(1, k + 1):
                if j != i:
                    m |= _span("x", i, j, 0, s - 1, p) | _span("y", i, j, 0, p - s, p)
            models[f"z{i}_{s}"] = m
            roles[f"z{i}_{s}"] = ("z", i, s)
    for a, b in inst.g.edges():
        (i, s), (j, t) = index[a], index[b]
        if i == j:
            continue
        if i > j:
            (i, s), (j, t) = (j, t), (i, s)
        m = (
            _span("x", i, j, s, p + 1, p)
            | _span("y", i, j, p - s + 1, p + 1, p)
            | _span("x", j, i, t, p + 1, p)
            | _span("y", j, i, p - t + 1, p + 1, p)
        )
        name = f"r{i}_{j}_{s}_{t}"
        models[name] = m
        roles[name] = ("r", i, j, s, t)
    rep = HRepresentation(sub, models)
    rep.check()
    return ReductionOutput(rep, k * (k + 1) // 2, roles)


def reduce_mis_to_ds(inst: MulticolorInstance) -> ReductionOutput:
    """Multicolored independent set instance to a dominating-set instance with target k."""
    out = reduce_mcc_to_is(inst)
    models = dict(out.rep.models)
    roles = dict(out.roles)
    for i in range(1, inst.k + 1):
        models[f"d{i}"] = {f"u{i}"}
        roles[f"d{i}"] = ("d", i)
    rep = HRepresentation(out.rep.subdivision, models)
    return ReductionOutput(rep, inst.k, roles)


def pair_adjacency_violations(out: ReductionOutput) -> list:
    """Index tuples where z-r adjacency disagrees with the rule 'nonadjacent iff indices match'."""
    g = out.rep.graph
    bad = []
    zs = [(v, r) for v, r in out.roles.items() if r[0] == "z"]
    rs = [(v, r) for v, r in out.roles.items() if r[0] == "r"]
    for rv, (_, i, j, s, t) in rs:
        for zv, (_, l, h) in zs:
            if l == i:
                want_adjacent = h != s
            elif l == j:
                want_adjacent = h != t
            else:
                want_adjacent = False
            if g.has_edge(zv, rv) != want_adjacent:
                bad.append((zv, rv))
    return bad

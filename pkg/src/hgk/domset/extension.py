"""Bottom-up dynamic program for colored dominating sets on nice T-representations.

Setting: every model holds at most one branching node.  A vertex whose model
holds branching node x is an *x-vertex*; the rest live inside the interior of
one tree-edge path (*edge vertices*).  Each branching node x carries a set of
required colors ``C_x``: x is *loaded* when it is nonempty, and then the chosen
set must contain between one and ``d`` x-vertices whose colors are exactly
``C_x``; unloaded nodes admit no x-vertex at all.

Two tables are filled per node, indexed by the x-vertices sorted by how far
their models climb towards the parent:

* ``beta[x][i]`` (loaded x): fewest vertices of the subtree part dominating all
  of it while containing the i-th x-vertex;
* ``gamma[x][i]`` (unloaded x): fewest vertices dominating the subtree part
  except possibly the first ``i`` x-vertices, which the parent side handles.

On a single edge path the leftover work is an interval covering problem solved
greedily by :meth:`NiceTree.alpha`.

By default the recurrences are exact for the constrained problem.  With
``literal=True`` the simpler uncorrected recurrences are used instead: targets that
a child vertex already dominates are still charged, and an unloaded node only
accepts the cheapest cover of each child path (see ``gamma`` below).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product

from ..errors import ValidationError
from ..graph import sorted_vertices, vertex_key
from ..model import HRepresentation

INF = math.inf


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass
class NodeTables:
    vertices: list  # x-vertices in parent-edge order
    beta: list | None = None
    gamma: list | None = None
    beta_arg: dict = field(default_factory=dict)
    gamma_arg: dict = field(default_factory=dict)


class NiceTree:
    """A nice representation rooted at ``root`` with per-edge interval data."""

    def __init__(self, rep: HRepresentation, coloring: dict, root: str | None = None):
        base = rep.base
        if not base.is_tree():
            raise ValidationError("base multigraph must be a tree")
        self.rep = rep
        self.coloring = coloring
        self.root = min(base.nodes) if root is None else root
        self.parent = {self.root: None}
        self.parent_edge = {}
        self.children = {x: [] for x in base.nodes}
        order = [self.root]
        for x in order:
            for eid in sorted(base.incident_edges(x)):
                z = base.other_end(eid, x)
                if z not in self.parent:
                    self.parent[z] = x
                    self.parent_edge[z] = eid
                    self.children[x].append(z)
                    order.append(z)
        self.postorder = order[::-1]
        self.home = {}  # x-vertex -> its branching node
        self.edge_home = {}  # edge vertex -> child node below its edge
        for v, m in rep.models.items():
            br = [x for x in m if not isinstance(x, tuple)]
            if len(br) > 1:
                raise ValidationError(f"vertex {v!r} is not nice")
            if br:
                self.home[v] = br[0]
            else:
                eid = next(iter(m))[0]
                a, b = base.endpoints(eid)
                self.edge_home[v] = b if self.parent.get(b) == a else a
        self.interval = {}  # child node z -> vertex -> (lo, hi) on the path parent(z)..z
        self.edge_vertices = {}
        for z, eid in self.parent_edge.items():
            path = rep.subdivision.path_from(eid, self.parent[z])
            pos = {node: k for k, node in enumerate(path)}
            iv = {}
            for v in rep.vertices_at(self.parent[z]) | rep.vertices_at(z):
                iv[v] = self._span(rep.models[v], pos)
            for node in path[1:-1]:
                for v in rep.vertices_at(node):
                    iv.setdefault(v, self._span(rep.models[v], pos))
            self.interval[z] = iv
            self.edge_vertices[z] = sorted_vertices(v for v, h in self.edge_home.items() if h == z)
        self.x_vertices = {x: [] for x in base.nodes}
        for v, x in self.home.items():
            self.x_vertices[x].append(v)
        for x, vs in self.x_vertices.items():
            if x == self.root:
                vs.sort(key=vertex_key)
            else:
                iv = self.interval[x]
                vs.sort(key=lambda v: (iv[v][0], iv[v][1], vertex_key(v)))
        self._alpha_memo: dict = {}

    @staticmethod
    def _span(model, pos):
        ks = [pos[x] for x in model if x in pos]
        return (min(ks), max(ks))

    def meets(self, z, u, w) -> bool:
        """Whether the models of u and w share a node of the path into ``z``."""
        a, b = self.interval[z][u], self.interval[z][w]
        return a[0] <= b[1] and b[0] <= a[1]

    def alpha(self, z, targets) -> tuple:
        """Fewest edge vertices of the path into ``z`` dominating ``targets``.

        Greedy: take the undominated target reaching least far up, cover it with
        the dominator reaching furthest up.  Returns ``(value, chosen)``.
        """
        key = (z, frozenset(targets))
        hit = self._alpha_memo.get(key)
        if hit is not None:
            return hit
        iv = self.interval[z]
        pool = self.edge_vertices[z]
        left = set(targets)
        chosen = []
        value = 0
        while left:
            w = max(left, key=lambda v: (iv[v][0], iv[v][1], vertex_key(v)))
            doms = [u for u in pool if self.meets(z, u, w)]
            if not doms:
                value = INF
                chosen = None
                break
            u = min(doms, key=lambda v: (iv[v][0], iv[v][1], vertex_key(v)))
            chosen.append(u)
            value += 1
            left = {t for t in left if not self.meets(z, u, t)}
        out = (value, tuple(chosen) if chosen is not None else None)
        self._alpha_memo[key] = out
        return out


@dataclass
class ExtensionResult:
    value: float
    witness: frozenset | None
    tables: dict


def solve_extension(
    tree: NiceTree, required: dict, d: int, literal: bool = False
) -> ExtensionResult:
    """Minimum dominating set with ``required[x]`` colors on x-vertices and at most
    ``d`` x-vertices per node; value ``inf`` when none exists."""
    tabs: dict = {}
    for x in tree.postorder:
        cx = frozenset(required.get(x, ()))
        t = NodeTables(tree.x_vertices[x])
        tabs[x] = t
        if cx:
            _fill_beta(tree, tabs, x, cx, d, literal)
        else:
            _fill_gamma(tree, tabs, x, literal)
    top = tabs[tree.root]
    if top.beta is not None:
        value = min(top.beta, default=INF)
        start = ("beta", top.beta.index(value)) if value < INF else None
    else:
        value = top.gamma[0]
        start = ("gamma", 0) if value < INF else None
    witness = None
    if start is not None:
        out: set = set()
        _collect(tree, tabs, tree.root, start, out)
        witness = frozenset(out)
    return ExtensionResult(value, witness, tabs)


# --------------------------------------------------------------- child costs


def _unloaded_child_cost(tree, tabs, z, base_targets, extra_of):
    zt = tabs[z]
    best, arg = INF, None
    for h in range(len(zt.vertices) + 1):
        g = zt.gamma[h]
        if g == INF:
            continue
        targets = list(base_targets) + extra_of(h)
        a, chosen = tree.alpha(z, targets)
        if g + a < best:
            best, arg = g + a, ("gamma", h, chosen)
    return best, arg


def _delta(tree, tabs, x, z, v, literal):
    """Cost of the subtree at child z plus its path, given parent-side dominator v."""
    edge = tree.edge_vertices[z]
    if tabs[z].beta is not None:
        return _loaded_with(tree, tabs, z, v)
    zv = tabs[z].vertices
    base_targets = [w for w in edge if not tree.meets(z, w, v)]

    def extra(h):
        if h == 0:
            return []
        u = zv[h - 1]
        if not literal and tree.meets(z, u, v):
            return []
        return [u]

    return _unloaded_child_cost(tree, tabs, z, base_targets, extra)


def _loaded_with(tree, tabs, z, v):
    zt = tabs[z]
    edge = tree.edge_vertices[z]
    best, arg = INF, None
    for h, u in enumerate(zt.vertices):
        b = zt.beta[h]
        if b == INF:
            continue
        targets = [w for w in edge if not tree.meets(z, w, v) and not tree.meets(z, w, u)]
        a, chosen = tree.alpha(z, targets)
        if b + a < best:
            best, arg = b + a, ("beta", h, chosen)
    return best, arg


# --------------------------------------------------------------- loaded node


def _fill_beta(tree, tabs, x, cx, d, literal):
    t = tabs[x]
    kids = tree.children[x]
    s = len(kids)
    verts = t.vertices
    p = len(verts)
    colors = sorted(cx, key=lambda c: sorted(c))
    bit = {c: 1 << k for k, c in enumerate(colors)}
    full_col = (1 << len(colors)) - 1
    full_kids = (1 << s) - 1
    # per child, per x-vertex: cost and argmin
    delta = [[_delta(tree, tabs, x, z, v, literal) for v in verts] for z in kids]
    d_sub = {}
    for mask in range(1 << s):
        row = []
        for i in range(p):
            total = 0
            for j in range(s):
                if (mask >> j) & 1:
                    total += delta[j][i][0]
            row.append(total)
        d_sub[mask] = row
    # cheapest extra block per (color, child set)
    block = {}
    for c in colors:
        members = [i for i in range(p) if tree.coloring.get(verts[i]) == c]
        for mask in range(1 << s):
            best = min(((d_sub[mask][i], i) for i in members), default=(INF, None))
            block[(c, mask)] = best
    # layers[k][(child mask, color mask)] = (cost, back pointer) using k extra blocks
    layers = [{(0, 0): (0, None)}]
    for _ in range(max(0, d - 1)):
        nxt: dict = {}
        for (mask, col), (cost, _) in layers[-1].items():
            free = full_kids & ~mask
            for c in colors:
                for sub in _submasks(free):
                    val, i = block[(c, sub)]
                    if val == INF:
                        continue
                    if sub == 0 and col & bit[c]:
                        continue
                    key = (mask | sub, col | bit[c])
                    new = cost + 1 + val
                    if key not in nxt or new < nxt[key][0]:
                        nxt[key] = (new, (mask, col, c, sub, i))
        if not nxt:
            break
        layers.append(nxt)
    t.beta = [INF] * p
    for i in range(p):
        c = tree.coloring.get(verts[i])
        if c not in bit:
            continue
        best, arg = INF, None
        for own in _submasks(full_kids):
            base = 1 + d_sub[own][i]
            if base == INF:
                continue
            rest = full_kids & ~own
            for k, layer in enumerate(layers):
                for col in (full_col, full_col & ~bit[c]):
                    hit = layer.get((rest, col))
                    if hit is not None and base + hit[0] < best:
                        best, arg = base + hit[0], (own, k, rest, col)
        t.beta[i] = best
        if arg is not None:
            own, k, rest, col = arg
            assign = {j: i for j in range(s) if (own >> j) & 1}
            picks = [i]
            state = (rest, col)
            for level in range(k, 0, -1):
                _, back = layers[level][state]
                mask, pcol, c2, sub, i2 = back
                picks.append(i2)
                for j in range(s):
                    if (sub >> j) & 1:
                        assign[j] = i2
                state = (mask, pcol)
            t.beta_arg[i] = (picks, {kids[j]: delta[j][assign[j]][1] for j in range(s)})


# ------------------------------------------------------------- unloaded node


def _fill_gamma(tree, tabs, x, literal):
    t = tabs[x]
    kids = tree.children[x]
    verts = t.vertices
    p = len(verts)
    index = {v: k for k, v in enumerate(verts)}
    costs = []  # per child: list over threshold t of (cost, arg, covered mask)
    for z in kids:
        ivz = tree.interval[z]
        by_reach = sorted(verts, key=lambda v: (ivz[v][1], vertex_key(v)))
        zt = tabs[z]
        edge = tree.edge_vertices[z]
        row = []
        for th in range(p + 1):
            suffix = by_reach[th:]
            covered = 0
            for v in suffix:
                covered |= 1 << index[v]
            if zt.beta is not None:
                best, arg = INF, None
                for h, u in enumerate(zt.vertices):
                    b = zt.beta[h]
                    if b == INF:
                        continue
                    targets = [w for w in edge if not tree.meets(z, w, u)]
                    targets += [v for v in suffix if literal or not tree.meets(z, v, u)]
                    a, chosen = tree.alpha(z, targets)
                    if b + a < best:
                        best, arg = b + a, ("beta", h, chosen)
            else:
                zv = zt.vertices
                best, arg = INF, None
                for h in range(len(zv) + 1):
                    g = zt.gamma[h]
                    if g == INF:
                        continue
                    targets = list(edge) + zv[:h] + suffix
                    a, chosen = tree.alpha(z, targets)
                    if g + a < best:
                        best, arg = g + a, ("gamma", h, chosen)
            row.append((best, arg, covered))
        costs.append(row)
    need = [sum(1 << k for k in range(i, p)) for i in range(p + 1)]
    t.gamma = [INF] * (p + 1)
    if literal:
        # each child keeps its cheapest cost and covers as much as that cost allows
        picks = []
        for row in costs:
            eta = row[p][0]
            psi = min(th for th in range(p + 1) if row[th][0] == eta)
            picks.append(psi)
        total = sum(costs[j][picks[j]][0] for j in range(len(kids)))
        covered = 0
        for j, th in enumerate(picks):
            covered |= costs[j][th][2]
        for i in range(p + 1):
            if total < INF and need[i] & ~covered == 0:
                t.gamma[i] = total
                t.gamma_arg[i] = {kids[j]: costs[j][th][1] for j, th in enumerate(picks)}
        return
    # exact: try every combination of useful thresholds
    options = []
    for row in costs:
        opts = []
        prev = None
        for th in range(p + 1):
            c = row[th][0]
            if c == INF:
                continue
            if prev is None or c < prev:
                opts.append(th)
                prev = c
        options.append(opts)
    if any(not o for o in options):
        return
    for combo in product(*options):
        total = 0
        covered = 0
        for j, th in enumerate(combo):
            total += costs[j][th][0]
            covered |= costs[j][th][2]
        for i in range(p + 1):
            if need[i] & ~covered == 0 and total < t.gamma[i]:
                t.gamma[i] = total
                t.gamma_arg[i] = {kids[j]: costs[j][th][1] for j, th in enumerate(combo)}


# ------------------------------------------------------------ reconstruction


def _collect(tree, tabs, x, entry, out: set):
    kind, i = entry
    t = tabs[x]
    if kind == "beta":
        picks, child_args = t.beta_arg[i]
        out.update(t.vertices[k] for k in picks)
    else:
        child_args = t.gamma_arg[i]
    for z, arg in child_args.items():
        ckind, h, chosen = arg
        out.update(chosen)
        _collect(tree, tabs, z, (ckind, h), out)

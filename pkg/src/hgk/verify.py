"""Cross-check suite: every bound and oracle comparison as one record per (instance, check)."""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass
from itertools import combinations

from .clique import clique_kernel, clique_oracle, e_clique_oracle, max_clique_with_e_vertex
from .decomposition import caterpillar_decomposition, decomposition_report
from .domset.extension import NiceTree
from .domset.oracle import (
    closed_masks,
    constrained_domset_oracle,
    dominating_set_at_most,
    domset_oracle,
)
from .domset.pipeline import (
    _prepare,
    coloring,
    covered_tree_edges,
    domination_number_tgraph,
    dominated_u_vertices,
)
from .domset.transform import contract_tree_edges
from .generators import (
    pair_adjacency_violations,
    derive_seed,
    make_rng,
    multicolored_clique_oracle,
    multicolored_is_oracle,
    random_hgraph,
    random_multicolored,
    random_small_multigraph,
    random_tgraph,
    reduce_mcc_to_is,
    reduce_mis_to_ds,
    theta_instance,
)
from .kernels import all_minimum_dominating_sets
from .model import HRepresentation, MultiGraph, Subdivision
from .separators import (
    hgraph_minimal_separators,
    lower_bound_theta,
    minimal_separators_oracle,
    separator_count_limit,
)

PASS, FAIL = "pass", "fail"


@dataclass(frozen=True)
class Record:
    instance: str
    metric: str
    value: str
    bound: str
    verdict: str
    wall_ms: float | None = None


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return f"{x:.6g}"
    return "" if x is None else str(x)


def record(instance, metric, value, bound, ok, wall=None) -> Record:
    return Record(instance, metric, _fmt(value), _fmt(bound), PASS if ok else FAIL, wall)


class Report:
    def __init__(self, records=(), timings: bool = False):
        self.records = list(records)
        self.timings = timings

    def extend(self, recs):
        self.records.extend(recs)

    def sorted(self) -> list:
        return sorted(self.records, key=lambda r: (r.instance, r.metric))

    @property
    def failures(self) -> list:
        return [r for r in self.records if r.verdict == FAIL]

    @property
    def ok(self) -> bool:
        return not self.failures

    def families(self) -> set:
        return {r.metric.split(":")[0] for r in self.records}

    def to_tsv(self) -> str:
        head = ["instance", "metric", "value", "bound", "verdict"]
        if self.timings:
            head.append("wall_ms")
        lines = ["\t".join(head)]
        for r in self.sorted():
            row = [r.instance, r.metric, r.value, r.bound, r.verdict]
            if self.timings:
                row.append(_fmt(r.wall_ms))
            lines.append("\t".join(row))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        rows = []
        for r in self.sorted():
            d = asdict(r)
            if not self.timings:
                d.pop("wall_ms")
            rows.append(d)
        return json.dumps({"records": rows, "failures": len(self.failures)}, indent=1, sort_keys=True) + "\n"


class _Timer:
    def __enter__(self):
        self.t = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.ms = 1000 * (time.perf_counter() - self.t)


# ------------------------------------------------------------------ corpora


def hgraph_corpus(seed: int, count: int, n_max: int = 14, family: int = 1):
    """Random H-graphs with 1, 2 or 3 multigraph edges (cycling), n in 2..n_max."""
    for i in range(count):
        rng = make_rng(seed, family, i)
        h = random_small_multigraph(1 + i % 3, rng)
        n = int(rng.integers(2, n_max + 1))
        yield f"hg{family}-{i:04d}", random_hgraph(h, n, derive_seed(seed, family, i, 1))


def tgraph_corpus(seed: int, count: int, n_max: int = 12, max_leaves: int = 3):
    for i in range(count):
        rng = make_rng(seed, 3, i)
        n = int(rng.integers(2, n_max + 1))
        yield f"tg-{i:04d}", random_tgraph(derive_seed(seed, 3, i, 1), n, max_leaves)


# ------------------------------------------------------------------- checks


def check_widths(seed: int, count: int, n_max: int = 14) -> list:
    out = []
    for name, rep in hgraph_corpus(seed, count, n_max, family=1):
        with _Timer() as t:
            dec = caterpillar_decomposition(rep)
            rpt = decomposition_report(rep, dec, ds=(1, 2))
        m_h = rep.base.num_edges
        n = rep.graph.n
        out.append(record(name, "mim_bound", rpt.max_mim, 2 * m_h, rpt.verified and rpt.mim_bound_ok, t.ms))
        out.append(record(name, "boolw_bound", rpt.max_nec(1), n ** (2 * m_h), rpt.verified and rpt.boolw_bound_ok))
        out.append(record(name, "nec_bound", rpt.max_nec(2), "n^(d*mim)", rpt.verified and rpt.nec_bound_ok))
    return out


def check_separators(seed: int, count: int, n_max: int = 12) -> list:
    out = []
    for name, rep in hgraph_corpus(seed, count, n_max, family=2):
        g = rep.graph
        with _Timer() as t:
            got = hgraph_minimal_separators(rep)
        want = minimal_separators_oracle(g)
        bound = separator_count_limit(g.n, rep.base.num_edges)
        out.append(record(name, "separator_complete", len(got), len(want), got == want, t.ms))
        out.append(record(name, "separator_count_bound", len(want), bound, len(want) <= bound))
    return out


def check_theta(pairs=((2, 2), (3, 2), (4, 3))) -> list:
    out = []
    for r, k in pairs:
        rep = theta_instance(r, k)
        with _Timer() as t:
            count = len(minimal_separators_oracle(rep.graph))
        need = lower_bound_theta(r, k)
        out.append(record(f"theta-r{r}-k{k}", "theta_lower_bound", count, need, count >= need, t.ms))
        out.append(record(f"theta-r{r}-k{k}", "theta_size", rep.graph.n, k * r + 2, rep.graph.n == k * r + 2))
    return out


def colored_members_max(rep: HRepresentation, prepare: bool = True) -> tuple:
    """Largest |D ∩ U-vertices| over all minimum dominating sets, and its bound.

    With ``prepare`` the tree is first trimmed and dissolved, as the solver does."""
    prep = _prepare(rep) if prepare else rep
    g = prep.graph
    colored = {v for v in prep.vertices if any(not isinstance(x, tuple) for x in prep.models[v])}
    worst = 0
    for m in all_minimum_dominating_sets(closed_masks(g)):
        worst = max(worst, sum(1 for v in g.vertices_of(m) if v in colored))
    return worst, 3 * len(prep.base.nodes) - 2


def check_domset(seed: int, count: int, n_max: int = 12, mutate: bool = False) -> list:
    out = []
    for name, rep in tgraph_corpus(seed, count, n_max):
        g = rep.graph
        with _Timer() as t:
            sol = domination_number_tgraph(rep)
        want = domset_oracle(g) + (1 if mutate else 0)
        verdicts = all(sol.verdict(k) == (want <= k) for k in range(1, g.n + 1))
        ok = verdicts and sol.verified and len(sol.witness) == sol.value
        out.append(record(name, "domset_oracle", sol.value, want, ok, t.ms))
        worst, bound = colored_members_max(rep)
        out.append(record(name, "colored_members_bound", worst, bound, worst <= bound))
    return out


def _line_instance(rng, n_e: int) -> tuple:
    """One tree edge a-b with interval models; a-, b- and path vertices."""
    length = int(rng.integers(3, 9))
    base = MultiGraph(("a", "b"), (("f1", "a", "b"),))
    sub = Subdivision(base, {"f1": length})
    path = sub.path("f1")
    models = {}
    for i in range(n_e):
        lo = int(rng.integers(1, length + 1))
        hi = int(rng.integers(lo, min(length, lo + 3) + 1))
        models[f"e{i}"] = set(path[lo : hi + 1])
    for i in range(int(rng.integers(0, 4))):
        models[f"a{i}"] = set(path[: int(rng.integers(1, length + 1))])
    for i in range(int(rng.integers(0, 4))):
        models[f"b{i}"] = set(path[int(rng.integers(1, length + 1)) :])
    return HRepresentation(sub, models)


def alpha_exhaustive(tree: NiceTree, z, targets) -> float:
    pool = tree.edge_vertices[z]
    targets = list(targets)
    for size in range(len(pool) + 1):
        for combo in combinations(pool, size):
            if all(any(tree.meets(z, u, t) for u in combo) for t in targets):
                return size
    return float("inf")


def check_alpha(seed: int, count: int) -> list:
    out = []
    for i in range(count):
        rng = make_rng(seed, 6, i)
        rep = _line_instance(rng, int(rng.integers(1, 11)))
        tree = NiceTree(rep, coloring(rep), root="a")
        members = sorted(tree.interval["b"], key=str)
        pick = [v for v in members if rng.random() < 0.5]
        got, _ = tree.alpha("b", pick)
        want = alpha_exhaustive(tree, "b", pick)
        out.append(record(f"alpha-{i:04d}", "alpha_greedy", got, want, got == want))
    return out


def contraction_checks(rep: HRepresentation, chosen) -> list:
    """``(label, before, after)`` triples for the contraction and deletion steps."""
    prep = _prepare(rep)
    colors = coloring(prep)
    chosen = frozenset(chosen)
    g0 = prep.graph
    before = constrained_domset_oracle(g0, colors, chosen)[0]
    in_c = [v for v in prep.vertices if colors.get(v) in chosen]
    a_edges = covered_tree_edges(prep, in_c)
    after_a = contract_tree_edges(prep, a_edges)
    res = [("contract_colored", before, constrained_domset_oracle(after_a.graph, colors, chosen)[0])]
    in_c_nodes = set()
    for v in in_c:
        in_c_nodes |= {x for x in prep.models[v] if not isinstance(x, tuple)}
    others = [v for v in prep.vertices if v in colors and colors[v] not in chosen]
    b_edges = {
        eid
        for eid in covered_tree_edges(prep, others) - a_edges
        if not set(prep.base.endpoints(eid)) & in_c_nodes
    }
    if b_edges and not any(prep.e_vertices(e) for e in b_edges):
        mid = constrained_domset_oracle(after_a.graph, colors, chosen)[0]
        after_b = contract_tree_edges(prep, a_edges | b_edges)
        res.append(("contract_uncolored", mid, constrained_domset_oracle(after_b.graph, colors, chosen)[0]))
    dele = dominated_u_vertices(prep, colors, chosen)
    if dele:
        kept = prep.restrict(v for v in prep.vertices if v not in dele)
        res.append(("drop_dominated", before, constrained_domset_oracle(kept.graph, colors, chosen)[0]))
    return res


def check_contractions(seed: int, count: int, per_instance: int = 6) -> list:
    out = []
    for name, rep in tgraph_corpus(seed, count):
        prep = _prepare(rep)
        realized = sorted(set(coloring(prep).values()), key=lambda c: (len(c), sorted(c)))
        rng = make_rng(seed, 7, int(name.split("-")[1]))
        sets = [()]
        for _ in range(per_instance):
            if not realized:
                break
            size = int(rng.integers(1, min(3, len(realized)) + 1))
            idx = sorted(rng.choice(len(realized), size=size, replace=False).tolist())
            sets.append(tuple(realized[j] for j in idx))
        for si, chosen in enumerate(sets):
            for label, a, b in contraction_checks(rep, chosen):
                out.append(record(name, f"{label}:C{si}", _fmt(b), _fmt(a), a == b))
    return out


def check_clique(seed: int, count: int, n_max: int = 14, ks=(2, 3, 4)) -> list:
    out = []
    for name, rep in hgraph_corpus(seed, count, n_max, family=8):
        g = rep.graph
        omega = clique_oracle(g)[0]
        got = max_clique_with_e_vertex(rep)
        want = e_clique_oracle(rep)
        valid = g.is_clique(got) and (not got or any(rep.classify(v).kind == "e" for v in got))
        out.append(record(name, "e_clique", len(got), want, valid and len(got) == want))
        for k in ks:
            ker = clique_kernel(rep, k)
            if ker.verdict == "yes":
                ok = len(ker.certificate) >= k and g.is_clique(ker.certificate)
                size = 0
            else:
                ok = (clique_oracle(ker.reduced)[0] >= k) == (omega >= k)
                size = ker.reduced.n
            out.append(record(name, f"kernel_equiv:k{k}", ker.verdict, omega >= k, ok))
            out.append(record(name, f"kernel_size:k{k}", size, ker.bound, size <= ker.bound))
    return out


def check_reductions(seed: int, count: int, ks=(2, 3), ps=(1, 2, 3)) -> list:
    out = []
    for i in range(count):
        for k in ks:
            for p in ps:
                inst = random_multicolored(k, p, derive_seed(seed, 9, i, k, p))
                name = f"red-{i:03d}-k{k}-p{p}"
                red = reduce_mcc_to_is(inst)
                base = red.rep.base
                shape = len(base.nodes) == k * (k + 1) // 2 and base.num_edges == 2 * k * (k - 1)
                shape &= all(c == p for c in red.rep.subdivision.sub_count.values())
                out.append(record(name, "reduction_shape", len(base.nodes), k * (k + 1) // 2, shape))
                bad = pair_adjacency_violations(red)
                out.append(record(name, "pair_adjacency", len(bad), 0, not bad))
                g1 = red.rep.graph
                alpha = clique_oracle(g1.complement(), cap=63)[0]
                mcc = multicolored_clique_oracle(inst) is not None
                out.append(record(name, "reduction_is", alpha >= red.target, mcc, (alpha >= red.target) == mcc))
                red2 = reduce_mis_to_ds(inst)
                ds = dominating_set_at_most(red2.rep.graph, k) is not None
                mis = multicolored_is_oracle(inst) is not None
                out.append(record(name, "reduction_ds", ds, mis, ds == mis))
    return out


FAMILIES = ("widths", "separators", "theta", "domset", "alpha", "contractions", "clique", "reductions")


def verify_suite(seed: int, count: int, families=None, mutate: bool = False, timings: bool = False) -> Report:
    families = FAMILIES if families in (None, "all") else families
    rpt = Report(timings=timings)
    for fam in families:
        if fam == "widths":
            rpt.extend(check_widths(seed, count))
        elif fam == "separators":
            rpt.extend(check_separators(seed, count))
        elif fam == "theta":
            rpt.extend(check_theta())
        elif fam == "domset":
            rpt.extend(check_domset(seed, count, mutate=mutate))
        elif fam == "alpha":
            rpt.extend(check_alpha(seed, count))
        elif fam == "contractions":
            rpt.extend(check_contractions(seed, count))
        elif fam == "clique":
            rpt.extend(check_clique(seed, count))
        elif fam == "reductions":
            rpt.extend(check_reductions(seed, max(1, count // 5)))
        else:
            raise ValueError(f"unknown check family {fam!r}")
    return rpt

"""Exit criteria at full scale.  Each test records one summary line, printed at the
end of the pytest run by the hook in conftest.py."""

import time

import pytest

from hgk.decomposition import caterpillar_decomposition, decomposition_report
from hgk.domset import dissolve_degree_two, domset_oracle, solve_domset_tgraph
from hgk.verify import (
    check_alpha,
    check_clique,
    check_contractions,
    check_reductions,
    check_separators,
    check_theta,
    colored_members_max,
    hgraph_corpus,
    tgraph_corpus,
)

pytestmark = pytest.mark.acceptance

SEED = 7
SUMMARY: list = []


def report(number: int, title: str, ok: bool, detail: str, seconds: float) -> None:
    line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail} ({seconds:.1f}s)"
    SUMMARY.append(line)
    print(line)


@pytest.fixture(scope="module")
def width_corpus():
    return [(name, rep) for name, rep in hgraph_corpus(SEED, 200, 14, family=1)]


@pytest.fixture(scope="module")
def width_reports(width_corpus):
    t = time.perf_counter()
    out = []
    for name, rep in width_corpus:
        out.append((name, rep, decomposition_report(rep, caterpillar_decomposition(rep), ds=(1, 2))))
    return out, time.perf_counter() - t


@pytest.fixture(scope="module")
def domset_corpus():
    return [(name, rep) for name, rep in tgraph_corpus(SEED, 100, 12)]


def test_c01_mim_bound(width_reports):
    reports, secs = width_reports
    m_values = {rep.base.num_edges for _, rep, _ in reports}
    bad = []
    cuts = 0
    for name, rep, rpt in reports:
        for c in rpt.cuts:
            cuts += 1
            if not c.verified or c.mim > 2 * rep.base.num_edges:
                bad.append((name, c.node))
    ok = not bad and len(reports) >= 200 and m_values == {1, 2, 3} and secs <= 120
    report(1, "mim <= 2|E(H)| on every cut", ok, f"{len(reports)} graphs, {cuts} cuts, {len(bad)} violations", secs)
    assert ok, bad[:5]


def test_c02_boolean_width_bound(width_reports):
    reports, secs = width_reports
    bad = []
    for name, rep, rpt in reports:
        n = rep.graph.n
        width = 2 * rep.base.num_edges
        for c in rpt.cuts:
            nec1 = c.nec[1][0]
            # log2(nec1) <= width * log2(n)  <=>  nec1 <= n ** width, in integers
            if not nec1 <= n**width:
                bad.append((name, c.node, "boolw"))
            for d in (1, 2):
                for val in c.nec[d]:
                    if not val <= n ** (d * c.mim):
                        bad.append((name, c.node, d))
    ok = not bad and len(reports) >= 200
    report(2, "boolw and nec_d <= n^(d*mim)", ok, f"{len(reports)} graphs, {len(bad)} violations", secs)
    assert ok, bad[:5]


def test_c03_separators():
    t = time.perf_counter()
    recs = check_separators(SEED, 100, 12)
    secs = time.perf_counter() - t
    fails = [r for r in recs if r.verdict != "pass"]
    graphs = len({r.instance for r in recs})
    ok = not fails and graphs >= 100
    report(3, "separator completeness and count bound", ok, f"{graphs} graphs, {len(fails)} failures", secs)
    assert ok, fails[:5]


def test_c04_theta_lower_bound():
    t = time.perf_counter()
    recs = check_theta(((2, 2), (3, 2), (4, 3)))
    secs = time.perf_counter() - t
    by = {(r.instance, r.metric): r for r in recs}
    big = by[("theta-r4-k3", "theta_lower_bound")]
    ok = all(r.verdict == "pass" for r in recs) and int(big.value) >= 81 and secs <= 30
    ok &= by[("theta-r4-k3", "theta_size")].value == "14"
    counts = ", ".join(f"{r.instance}={r.value}" for r in recs if r.metric == "theta_lower_bound")
    report(4, "theta separator count >= k^r", ok, counts, secs)
    assert ok


def test_c05_domset_correctness(domset_corpus):
    t = time.perf_counter()
    bad = []
    checked = 0
    for name, rep in domset_corpus:
        g = rep.graph
        assert g.is_connected() and len(dissolve_degree_two(rep).base.leaves()) <= 3 and g.n <= 12
        want = domset_oracle(g)
        for k in range(1, g.n + 1):
            verdict, sol = solve_domset_tgraph(rep, k)
            checked += 1
            witness_ok = g.is_dominating(sol.witness) and len(sol.witness) == sol.value
            if verdict != (want <= k) or not witness_ok:
                bad.append((name, k))
    secs = time.perf_counter() - t
    ok = not bad and len(domset_corpus) >= 100 and secs <= 600
    report(5, "domset verdicts equal the oracle", ok, f"{len(domset_corpus)} graphs, {checked} (graph, k) pairs, "
           f"{len(bad)} mismatches", secs)
    assert ok, bad[:5]


def test_c06_alpha_greedy():
    t = time.perf_counter()
    recs = check_alpha(SEED, 500)
    secs = time.perf_counter() - t
    fails = [r for r in recs if r.verdict != "pass"]
    ok = not fails and len(recs) >= 500
    report(6, "alpha greedy equals exhaustive optimum", ok, f"{len(recs)} pairs, {len(fails)} mismatches", secs)
    assert ok, fails[:5]


def test_c07_contractions():
    t = time.perf_counter()
    recs = check_contractions(SEED, 50)
    secs = time.perf_counter() - t
    fails = [r for r in recs if r.verdict != "pass"]
    graphs = len({r.instance for r in recs})
    ok = not fails and graphs >= 50
    report(7, "constrained optimum unchanged by contraction", ok,
           f"{graphs} graphs, {len(recs)} batches, {len(fails)} changes", secs)
    assert ok, fails[:5]


def test_c08_clique_kernel():
    t = time.perf_counter()
    recs = check_clique(SEED, 100, 14, ks=(2, 3, 4))
    secs = time.perf_counter() - t
    fails = [r for r in recs if r.verdict != "pass"]
    graphs = len({r.instance for r in recs})
    metrics = {r.metric for r in recs}
    ok = not fails and graphs >= 100 and {"e_clique", "kernel_equiv:k2", "kernel_size:k4"} <= metrics
    report(8, "clique kernel equivalence, size and e-vertex clique", ok,
           f"{graphs} graphs, {len(recs)} checks, {len(fails)} failures", secs)
    assert ok, fails[:5]


def test_c09_reductions():
    t = time.perf_counter()
    recs = check_reductions(SEED, 50, ks=(2, 3), ps=(1, 2, 3))
    secs = time.perf_counter() - t
    fails = [r for r in recs if r.verdict != "pass"]
    instances = len({r.instance for r in recs})
    ok = not fails and instances >= 50 * 6 and secs <= 300
    report(9, "reduction shape, adjacency law and both equivalences", ok,
           f"{instances} instances, {len(fails)} failures", secs)
    assert ok, fails[:5]


def test_c10_colored_members_bound(domset_corpus):
    t = time.perf_counter()
    bad = []
    for name, rep in domset_corpus:
        # both on the tree as generated and on the trimmed, dissolved tree
        for prepare in (False, True):
            worst, bound = colored_members_max(rep, prepare)
            if worst > bound:
                bad.append((name, prepare, worst, bound))
    secs = time.perf_counter() - t
    ok = not bad
    report(10, "|D & U-vertices| <= 3|V(T)|-2 for all minimum D", ok,
           f"{len(domset_corpus)} graphs, {len(bad)} violations", secs)
    assert ok, bad[:5]

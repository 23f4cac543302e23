"""The compiled kernels and their numpy fallbacks must agree bit for bit."""

from functools import reduce
from itertools import combinations
from operator import or_

import networkx as nx
import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from hgk import kernels
from hgk.generators import make_rng


def random_adj(n, seed, density):
    rng = make_rng(seed)
    adj = np.zeros(n, dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                adj[i] |= np.int64(1) << j
                adj[j] |= np.int64(1) << i
    return adj


graphs = st.tuples(st.integers(1, 11), st.integers(0, 2**32), st.floats(0.0, 1.0))


def to_nx(adj):
    g = nx.Graph()
    n = len(adj)
    g.add_nodes_from(range(n))
    g.add_edges_from((i, j) for i in range(n) for j in range(i + 1, n) if (int(adj[i]) >> j) & 1)
    return g


@given(graphs)
def test_domination_paths_agree(params):
    n, seed, dens = params
    adj = random_adj(n, seed, dens)
    closed = adj | (np.int64(1) << np.arange(n, dtype=np.int64))
    a = kernels.min_dominating_set_nb(closed)
    b = kernels.min_dominating_set_np(closed)
    assert a[0] == b[0] and int(a[1]) == int(b[1])
    full = (1 << n) - 1
    brute = min(
        size
        for size in range(n + 1)
        for c in combinations(range(n), size)
        if reduce(or_, (int(closed[i]) for i in c), 0) == full
    )
    assert a[0] == brute


@given(graphs, st.integers(0, 2**32))
def test_colored_domination_paths_agree(params, cseed):
    n, seed, dens = params
    adj = random_adj(n, seed, dens)
    closed = adj | (np.int64(1) << np.arange(n, dtype=np.int64))
    rng = make_rng(cseed)
    colors = rng.integers(0, 4, size=n).astype(np.int64)  # 0 = uncolored, else one bit
    colors = np.where(colors == 0, 0, np.int64(1) << (colors - 1))
    required = int(rng.integers(0, 8))
    a = kernels.min_dominating_set_nb(closed, colors, required)
    b = kernels.min_dominating_set_np(closed, colors, required)
    assert a[0] == b[0] and int(a[1]) == int(b[1])
    sets = kernels.all_minimum_dominating_sets(closed, colors, required)
    if a[0] < 0:
        assert sets == []
    else:
        assert int(a[1]) in sets and all(bin(m).count("1") == a[0] for m in sets)


def test_required_empty_color_set_is_enforced():
    closed = np.array([0b11, 0b11], dtype=np.int64)
    colors = np.array([1, 1], dtype=np.int64)
    assert kernels.min_dominating_set_np(closed, colors, 0)[0] == -1
    assert kernels.min_dominating_set_nb(closed, colors, 0)[0] == -1


@given(graphs)
def test_clique_paths_agree(params):
    n, seed, dens = params
    adj = random_adj(n, seed, dens)
    a, b = kernels.max_clique_nb(adj), kernels.max_clique_np(adj)
    assert a[0] == b[0] and int(a[1]) == int(b[1])
    assert a[0] == max(len(c) for c in nx.find_cliques(to_nx(adj)))


@given(st.integers(0, 2**32), st.floats(0.3, 0.9))
def test_large_clique_fallback_avoids_the_table(seed, dens):
    n = kernels.CLIQUE_TABLE_MAX + 8
    adj = random_adj(n, seed, dens)
    a, b = kernels.max_clique_nb(adj), kernels.max_clique_np(adj)
    assert a[0] == b[0] and int(a[1]) == int(b[1])
    assert a[0] == max(len(c) for c in nx.find_cliques(to_nx(adj)))


@given(graphs)
def test_separator_tables_agree(params):
    n, seed, dens = params
    n = min(n, 9)
    adj = random_adj(n, seed, dens)
    assert np.array_equal(kernels.minimal_separator_masks_nb(adj), kernels.minimal_separator_masks_np(adj))


@given(st.integers(1, 7), st.integers(1, 7), st.integers(0, 2**32), st.floats(0, 1))
def test_induced_matching_paths_agree(nl, nr, seed, dens):
    rng = make_rng(seed)
    rows = np.array([sum(1 << j for j in range(nr) if rng.random() < dens) for _ in range(nl)], dtype=np.int64)
    a = kernels.max_induced_matching_nb(rows, nr)
    assert a == kernels.max_induced_matching_np(rows, nr)
    # brute force over row subsets with distinct private columns
    best = 0
    for size in range(1, nl + 1):
        for combo in combinations(range(nl), size):
            for cols in _private_choices(rows, combo, nr):
                best = max(best, size)
                break
    assert a == best


def _private_choices(rows, combo, nr):
    # yields a column assignment making the matching induced, if any
    def rec(i, used):
        if i == len(combo):
            yield used
            return
        r = int(rows[combo[i]])
        for c in range(nr):
            if (r >> c) & 1 and c not in used:
                cols = used + [c]
                if all(
                    not ((int(rows[combo[a]]) >> cols[b]) & 1) for a in range(i + 1) for b in range(i + 1) if a != b
                ):
                    yield from rec(i + 1, cols)

    yield from rec(0, [])


@given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 2**32), st.floats(0, 1), st.integers(1, 3))
def test_nec_paths_agree(ns, no, seed, dens, d):
    rng = make_rng(seed)
    rows = np.array([sum(1 << j for j in range(no) if rng.random() < dens) for _ in range(ns)], dtype=np.int64)
    got = kernels.nec_count_nb(rows, no, d)
    assert got == kernels.nec_count_np(rows, no, d)
    vecs = set()
    for mask in range(1 << ns):
        vecs.add(
            tuple(min(d, sum(1 for i in range(ns) if (mask >> i) & 1 and (int(rows[i]) >> c) & 1)) for c in range(no))
        )
    assert got == len(vecs)

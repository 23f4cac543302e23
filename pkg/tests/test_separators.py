from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hgk.errors import SizeCapError
from hgk.generators import make_rng, random_hgraph, random_small_multigraph, theta_instance
from hgk.graph import SimpleGraph
from hgk.separators import (
    border_edges_by_path,
    hgraph_minimal_separators,
    hgraph_separator_candidates,
    lower_bound_theta,
    minimal_separators_oracle,
    separator_count_limit,
    sort_separators,
)

from helpers import complete_graph, cycle_graph, path_graph


def nx_minimal_separators(g: SimpleGraph) -> set:
    """Independent brute force using networkx components."""
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges())
    out = set()
    vs = list(g.vertices)
    for size in range(len(vs) + 1):
        for sep in combinations(vs, size):
            s = set(sep)
            rest = h.subgraph(v for v in vs if v not in s)
            full = 0
            for comp in nx.connected_components(rest):
                nbrs = set().union(*(set(h[v]) for v in comp)) - comp
                if nbrs == s:
                    full += 1
            if full >= 2:
                out.add(frozenset(s))
    return out


def test_path_has_inner_vertices_as_separators():
    assert minimal_separators_oracle(SimpleGraph("uvw", [("u", "v"), ("v", "w")])) == {frozenset("v")}
    assert minimal_separators_oracle(path_graph(5)) == {frozenset({i}) for i in (2, 3, 4)}


def test_complete_graph_has_none():
    assert minimal_separators_oracle(complete_graph(5)) == set()


def test_cycle_separators_are_nonadjacent_pairs():
    seps = minimal_separators_oracle(cycle_graph(5))
    assert len(seps) == 5 and all(len(s) == 2 for s in seps)


def test_disconnected_graph_has_empty_separator():
    assert frozenset() in minimal_separators_oracle(SimpleGraph([1, 2]))


def test_cap_is_enforced():
    with pytest.raises(SizeCapError):
        minimal_separators_oracle(path_graph(8), cap=5)


def test_interval_example_through_candidates(path_rep):
    assert hgraph_minimal_separators(path_rep) == {frozenset("v")}


def test_empty_candidate_is_present(path_rep):
    assert any(not c.edges and not c.vertices for c in hgraph_separator_candidates(path_rep))


@pytest.mark.parametrize("r, k, exact", [(2, 2, 9), (3, 2, 15), (4, 3, 102)])
def test_theta_counts(r, k, exact):
    # exact values frozen from the exhaustive oracle
    rep = theta_instance(r, k)
    assert rep.graph.n == k * r + 2
    seps = minimal_separators_oracle(rep.graph)
    assert len(seps) == exact
    assert len(seps) >= lower_bound_theta(r, k)
    assert hgraph_minimal_separators(rep) == seps


def test_theta_one_one_is_a_path():
    g = theta_instance(1, 1).graph
    assert g.n == 3 and g.m == 2 and g.is_connected()


@given(st.integers(0, 2**32), st.integers(1, 3), st.integers(1, 9))
def test_oracle_matches_networkx(seed, m, n):
    g = random_hgraph(random_small_multigraph(m, make_rng(seed)), n, seed).graph
    assert minimal_separators_oracle(g) == nx_minimal_separators(g)


@given(st.integers(0, 2**32), st.integers(1, 3), st.integers(1, 9))
def test_isolated_vertex_only_adds_the_empty_separator(seed, m, n):
    g = random_hgraph(random_small_multigraph(m, make_rng(seed)), n, seed).graph
    before = minimal_separators_oracle(g)
    after = minimal_separators_oracle(g.add_vertices(["iso"]))
    assert after == before | {frozenset()}


@given(st.integers(0, 2**32), st.integers(1, 3), st.integers(1, 12))
def test_candidates_are_complete_and_bounded(seed, m, n):
    rep = random_hgraph(random_small_multigraph(m, make_rng(seed)), n, seed)
    got = hgraph_minimal_separators(rep)
    assert got == minimal_separators_oracle(rep.graph)
    assert len(got) <= separator_count_limit(n, m)


@given(st.integers(0, 2**32), st.integers(1, 3), st.integers(1, 12))
def test_each_model_has_at_most_two_border_edges_per_path(seed, m, n):
    rep = random_hgraph(random_small_multigraph(m, make_rng(seed)), n, seed)
    borders = border_edges_by_path(rep)
    total = 0
    for eid, edges in borders.items():
        for v, model in rep.items():
            own = [e for e in edges if (e[0] in model) != (e[1] in model)]
            assert len(own) <= 2
        total += len(edges)
    assert total <= 2 * n * m


def test_sorting_is_by_size_then_ids():
    seps = [frozenset({3, 1}), frozenset({2}), frozenset({1, 2})]
    assert sort_separators(seps) == [frozenset({2}), frozenset({1, 2}), frozenset({1, 3})]

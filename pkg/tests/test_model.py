import pytest
from hypothesis import given
from hypothesis import strategies as st

from hgk.errors import ParseError, ValidationError
from hgk.generators import double_edge, random_hgraph, random_small_multigraph, make_rng, single_edge
from hgk.graph import SimpleGraph
from hgk.io import dumps_gr, dumps_hgr, dumps_parts, loads_gr, loads_hgr, loads_parts
from hgk.model import (
    HRepresentation,
    MultiGraph,
    Subdivision,
    build_intersection_graph,
    classify_vertex,
    make_representation,
    refine_representation,
    validate_representation,
)


def test_path_models_give_path_graph(path_rep):
    g = build_intersection_graph(path_rep)
    assert sorted(g.edges()) == [("u", "v"), ("v", "w")]


def test_identical_models_are_adjacent():
    rep = make_representation(["a", "b"], [("e", "a", "b")], {"u": {"a"}, "v": {"a"}})
    assert rep.graph.has_edge("u", "v")


def test_disjoint_subdivision_nodes_give_edgeless_graph():
    h = MultiGraph(("a", "b"), (("e1", "a", "b"), ("e2", "a", "b")))
    rep = HRepresentation(Subdivision(h, {"e1": 1, "e2": 1}), {"p": {("e1", 1)}, "q": {("e2", 1)}})
    assert rep.graph.m == 0 and rep.graph.n == 2


def test_violations():
    h = MultiGraph(("a", "b"), (("e", "a", "b"),))
    sub = Subdivision(h, {"e": 1})
    assert any("disconnected" in s for s in validate_representation(HRepresentation(sub, {"v": {"a", "b"}})))
    assert any("empty" in s for s in validate_representation(HRepresentation(sub, {"v": set()})))
    assert validate_representation(HRepresentation(sub, {"v": {"a"}, "w": {("e", 1)}, "x": {"b"}})) == []
    with pytest.raises(ValidationError):
        HRepresentation(sub, {"v": {"a", "b"}}).graph


def test_classification(path_rep):
    assert classify_vertex(path_rep, "v").kind == "e"
    assert classify_vertex(path_rep, "v").edge == "e"
    cu = classify_vertex(path_rep, "u")
    assert cu.kind == "U" and cu.branching == {"a"}
    rep = make_representation(["a", "b"], [("e", "a", "b", 1)], {"t": {"a", ("e", 1), "b"}})
    assert classify_vertex(rep, "t").branching == {"a", "b"}


def test_multigraph_rejects_bad_input():
    with pytest.raises(ValidationError):
        MultiGraph(("a", "a"), ())
    with pytest.raises(ValidationError):
        MultiGraph(("a",), (("e", "a", "z"),))


def test_subdivision_paths_and_degrees():
    h = double_edge()
    sub = Subdivision(h, {eid: 2 for eid, _, _ in h.edges})
    for eid, a, b in h.edges:
        path = sub.path(eid)
        assert path[0] == min(a, b) and path[-1] == max(a, b) and len(path) == 4
    assert len(sub.nodes) == 2 + 4
    for x in sub.nodes:
        assert len(sub.neighbors(x)) == 2


def test_simple_graph_basics():
    g = SimpleGraph([3, 1, 2, "x"], [(1, 2), (2, 3)])
    assert g.vertices == (1, 2, 3, "x")
    assert g.components() == [frozenset({1, 2, 3}), frozenset({"x"})]
    assert g.is_dominating({2, "x"}) and not g.is_dominating({2})
    assert g.complement().has_edge(1, 3)
    with pytest.raises(ValueError):
        SimpleGraph([1], [(1, 1)])


# ------------------------------------------------------------------ formats


def test_hgr_round_trip(path_rep):
    text = dumps_hgr(path_rep)
    back = loads_hgr(text)
    assert back.models == path_rep.models
    assert dumps_hgr(back) == text


@pytest.mark.parametrize(
    "text, line",
    [
        ("hgraph G\nnode a\nfoo\n", 3),
        ("hgraph G\nnode a\nnode b\nedge e a b x\n", 4),
        ("hgraph G\nnode a\nnode b\nedge e a b 1\nvertex v e:e:9\n", 5),
        ("hgraph G\nnode a\nvertex v a\nvertex v a\n", 4),
    ],
)
def test_hgr_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as exc:
        loads_hgr(text)
    assert exc.value.line == line


def test_hgr_invalid_model_is_rejected():
    with pytest.raises(ParseError):
        loads_hgr("hgraph G\nnode a\nnode b\nedge e a b 1\nvertex v a b\n")


def test_gr_round_trip_and_errors():
    g = SimpleGraph(["a", "b", "c"], [("a", "b")])
    assert loads_gr(dumps_gr(g)) == g
    with pytest.raises(ParseError) as exc:
        loads_gr("p 2 1\ne 1 3\n")
    assert exc.value.line == 2
    with pytest.raises(ParseError):
        loads_gr("p 2 2\ne 1 2\n")


def test_parts_round_trip():
    g = SimpleGraph(["a", "b", "c"])
    parts = [["a"], ["b", "c"]]
    assert loads_parts(dumps_parts(parts), g) == parts
    with pytest.raises(ParseError) as exc:
        loads_parts("part 1 a\npart 2 zz\n", g)
    assert exc.value.line == 2


# --------------------------------------------------------------- properties


@given(st.integers(0, 2**32), st.integers(1, 3), st.integers(1, 10))
def test_random_models_are_valid_and_round_trip(seed, m, n):
    h = random_small_multigraph(m, make_rng(seed))
    rep = random_hgraph(h, n, seed)
    assert rep.violations() == []
    assert loads_hgr(dumps_hgr(rep)).graph == rep.graph


@given(st.integers(0, 2**32), st.integers(1, 3), st.integers(1, 10))
def test_refinement_keeps_the_graph(seed, m, n):
    rep = random_hgraph(random_small_multigraph(m, make_rng(seed)), n, seed)
    fine = refine_representation(rep)
    assert fine.violations() == []
    assert fine.graph == rep.graph


@given(st.integers(0, 2**32), st.integers(2, 10))
def test_single_edge_gives_interval_graph(seed, n):
    # the model order along the path is an interval model of the graph
    rep = random_hgraph(single_edge(), n, seed)
    path = rep.subdivision.path("e1")
    pos = {x: i for i, x in enumerate(path)}
    spans = {v: (min(pos[x] for x in m), max(pos[x] for x in m)) for v, m in rep.items()}
    g = rep.graph
    for u in g.vertices:
        for w in g.vertices:
            if u != w:
                a, b = spans[u], spans[w]
                assert g.has_edge(u, w) == (a[0] <= b[1] and b[0] <= a[1])

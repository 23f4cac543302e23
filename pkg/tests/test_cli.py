import json

import pytest

from hgk import config
from hgk.cli import main
from hgk.generators import random_tgraph
from hgk.graph import SimpleGraph
from hgk.io import dumps_gr, dumps_parts, read_hgr, write_hgr


@pytest.fixture
def tree_file(tmp_path):
    p = tmp_path / "t.hgr"
    write_hgr(random_tgraph(3, 9), p)
    return p


def test_generate_theta_and_decompose(tmp_path):
    out = tmp_path / "th.hgr"
    assert main(["generate", "theta", "--r", "3", "--k", "2", "--out", str(out)]) == 0
    assert read_hgr(out).graph.n == 8
    rep = tmp_path / "dec.tsv"
    assert main(["decompose", "--input", str(out), "--nec-d", "2", "--report", str(rep)]) == 0
    lines = rep.read_text().splitlines()
    assert lines[0].split("\t") == ["node", "size", "mim", "nec_d", "boolw_cut", "bound_ok"]
    assert all(line.endswith("true") for line in lines[1:])


def test_separators_with_checks(tmp_path):
    src = tmp_path / "th.hgr"
    main(["generate", "theta", "--r", "2", "--k", "2", "--out", str(src)])
    out = tmp_path / "seps.txt"
    assert main(["separators", "--input", str(src), "--oracle", "--bound-check", "--out", str(out)]) == 0
    text = out.read_text().splitlines()
    assert "count 9" in text and text[-1].endswith("ok")
    assert json.loads((tmp_path / "seps.txt.json").read_text())["failures"] == 0


def test_domset_on_hgr_and_gr(tmp_path, tree_file):
    out = tmp_path / "d.txt"
    assert main(["domset", "--input", str(tree_file), "--k", "3", "--oracle-check", "--out", str(out)]) == 0
    text = out.read_text()
    assert text.startswith("verdict ") and "trace color_sets" in text
    gr = tmp_path / "star.gr"
    gr.write_text(dumps_gr(SimpleGraph("cxyz", [("c", "x"), ("c", "y"), ("c", "z")])))
    assert main(["domset", "--input", str(gr), "--k", "1", "--out", str(out)]) == 0
    assert out.read_text().splitlines()[:3] == ["verdict yes", "value 1", "witness c"]


def test_domset_leaf_limit(tree_file):
    assert main(["domset", "--input", str(tree_file), "--k", "1", "--max-leaves", "1"]) == 2


def test_domset_rejects_non_chordal_gr(tmp_path):
    gr = tmp_path / "c4.gr"
    gr.write_text("p 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n")
    assert main(["domset", "--input", str(gr), "--k", "2"]) == 2


def test_clique_outputs_kernel(tmp_path):
    src = tmp_path / "r.hgr"
    main(["generate", "random", "--n", "10", "--edges", "2", "--seed", "5", "--out", str(src)])
    out = tmp_path / "c.txt"
    assert main(["clique", "--input", str(src), "--k", "6", "--oracle-check", "--out", str(out)]) == 0
    text = out.read_text().splitlines()
    assert text[0] in ("verdict yes", "verdict no")
    assert main(["clique", "--input", str(src), "--k", "6", "--kernel-only", "--out", str(out)]) == 0


def test_reduction_from_files(tmp_path):
    g = SimpleGraph(["a1", "a2", "b1", "b2"], [("a1", "b2")])
    gr, parts = tmp_path / "g.gr", tmp_path / "g.parts"
    gr.write_text(dumps_gr(g))
    parts.write_text(dumps_parts([["a1", "a2"], ["b1", "b2"]]))
    out = tmp_path / "red.hgr"
    assert main(["generate", "reduction-is", "--input", str(gr), "--parts", str(parts), "--out", str(out)]) == 0
    assert read_hgr(out).base.num_edges == 4
    assert main(["generate", "reduction-ds", "--k", "3", "--p", "2", "--seed", "1", "--out", str(out)]) == 0
    assert "d3" in read_hgr(out).models


def test_verify_suite_passes_and_is_deterministic(tmp_path):
    a, b = tmp_path / "a.tsv", tmp_path / "b.tsv"
    assert main(["verify", "--suite", "all", "--seed", "7", "--count", "50", "--out", str(a)]) == 0
    assert main(["verify", "--suite", "all", "--seed", "7", "--count", "50", "--out", str(b), "--threads", "2"]) == 0
    assert a.read_bytes() == b.read_bytes()
    data = json.loads((tmp_path / "a.tsv.json").read_text())
    assert data["failures"] == 0
    assert len({r["metric"].split(":")[0] for r in data["records"]}) >= 9


def test_injected_mismatch_exits_one(tmp_path):
    assert main(["verify", "--suite", "domset", "--count", "5", "--inject-mismatch", "--out", str(tmp_path / "m")]) == 1


def test_malformed_hgr_exits_two(tmp_path, capsys):
    bad = tmp_path / "bad.hgr"
    bad.write_text("hgraph G\nnode a\nbogus line\n")
    assert main(["domset", "--input", str(bad), "--k", "1"]) == 2
    assert "bad.hgr:3:" in capsys.readouterr().err


def test_unknown_subcommand_exits_two():
    assert main(["frobnicate"]) == 2


def test_unknown_family_and_missing_file(tmp_path):
    assert main(["verify", "--suite", "nope"]) == 2
    assert main(["separators", "--input", str(tmp_path / "missing.hgr")]) == 2


def test_cap_flag_turns_into_input_error(tmp_path, tree_file):
    assert main(["--cap", "3", "domset", "--input", str(tree_file), "--k", "2", "--oracle-check"]) == 2
    assert config.default_cap("domset") == config.DEFAULT_CAPS["domset"]


def test_env_cap_parsing(monkeypatch):
    monkeypatch.setenv("HGK_CAP", "separators=5,domset=7")
    assert config.default_cap("separators") == 5 and config.default_cap("domset") == 7
    monkeypatch.setenv("HGK_CAP", "9")
    assert config.default_cap("clique") == 9
    config.set_cap_override({"clique": 4})
    try:
        assert config.default_cap("clique") == 4
    finally:
        config.set_cap_override(None)


def test_parts_must_partition(tmp_path):
    g = SimpleGraph(["a", "b", "c"])
    gr, parts = tmp_path / "g.gr", tmp_path / "g.parts"
    gr.write_text(dumps_gr(g))
    parts.write_text(dumps_parts([["a"], ["b"]]))
    assert main(["generate", "reduction-is", "--input", str(gr), "--parts", str(parts)]) == 2

from hgk.verify import (
    FAMILIES,
    Report,
    check_theta,
    check_widths,
    hgraph_corpus,
    record,
    tgraph_corpus,
    verify_suite,
)


def test_records_sort_and_serialize_deterministically():
    recs = [record("b", "m", 1, 2, True), record("a", "z", 1, 1, True), record("a", "m", 3, 2, False)]
    rpt = Report(recs)
    assert [(r.instance, r.metric) for r in rpt.sorted()] == [("a", "m"), ("a", "z"), ("b", "m")]
    assert rpt.to_tsv() == Report(reversed(recs)).to_tsv()
    assert not rpt.ok and len(rpt.failures) == 1
    assert rpt.to_tsv().splitlines()[0] == "instance\tmetric\tvalue\tbound\tverdict"


def test_timings_column_only_on_request():
    rpt = Report([record("a", "m", 1, 1, True, 1.5)], timings=True)
    assert rpt.to_tsv().splitlines()[0].endswith("wall_ms")
    assert "wall_ms" not in Report([record("a", "m", 1, 1, True, 1.5)]).to_json()


def test_same_seed_same_report():
    a = verify_suite(3, 10)
    b = verify_suite(3, 10)
    assert a.to_tsv() == b.to_tsv() and a.to_json() == b.to_json()
    assert a.ok


def test_default_run_covers_the_families():
    rpt = verify_suite(7, 5)
    assert len(rpt.families()) >= 9
    assert {r.instance.split("-")[0] for r in rpt.records} >= {"hg1", "hg2", "theta", "tg", "alpha", "red"}
    assert len(FAMILIES) == 8


def test_theta_record():
    recs = {(r.instance, r.metric): r for r in check_theta()}
    r = recs[("theta-r4-k3", "theta_lower_bound")]
    assert int(r.value) >= 81 and r.verdict == "pass"


def test_interval_instances_have_mim_at_most_two():
    for r in check_widths(11, 30):
        if r.metric == "mim_bound" and r.bound == "2":
            assert int(r.value) <= 2 and r.verdict == "pass"


def test_mutation_produces_failures():
    rpt = verify_suite(1, 4, families=("domset",), mutate=True)
    assert not rpt.ok
    assert all(r.verdict == "fail" for r in rpt.records if r.metric == "domset_oracle")


def test_corpora_are_seeded():
    a = [name for name, _ in hgraph_corpus(5, 3)]
    assert a == ["hg1-0000", "hg1-0001", "hg1-0002"]
    x = [rep for _, rep in tgraph_corpus(5, 3)]
    y = [rep for _, rep in tgraph_corpus(5, 3)]
    assert x == y

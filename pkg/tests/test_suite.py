import pytest

from oddcore.oracle import OracleBounds
from oddcore.workbench import suite as suite_mod
from oddcore.workbench.checks import CheckResult
from oddcore.workbench.suite import corpus_graph, corpus_size, parse_corpus, verify_suite


def test_exhaustive_five():
    r = verify_suite("exhaustive:n=5")
    assert r.graphs == 1024 and r.ok
    for cid, k in r.counts.items():
        assert k.passed + k.failed + k.inapplicable == 1024


def test_fixtures():
    r = verify_suite("fixtures")
    assert r.ok and r.graphs == corpus_size(parse_corpus("fixtures"))


def test_random_almost_bipartite_sample():
    r = verify_suite("random-ab:count=150,min_n=3,max_n=14", checks=[f"T{i}" for i in range(9, 19)], seed=3)
    assert r.ok and r.counts["T9"].inapplicable == 0


def test_random_general_sample():
    r = verify_suite("random-general:count=60,max_n=10", seed=4)
    assert r.ok


def test_parallel_output_is_byte_identical():
    spec = "random-ab:count=40,min_n=3,max_n=12"
    a = verify_suite(spec, seed=9, jobs=1).dumps()
    b = verify_suite(spec, seed=9, jobs=3).dumps()
    assert a == b


def test_timing_kept_out_of_default_json():
    r = verify_suite("exhaustive:n=2")
    assert "duration_s" not in r.to_json() and "duration_s" in r.to_json(include_timing=True)


def test_failures_are_collected_and_sorted(monkeypatch):
    def always_fails(ctx):
        return CheckResult("T1", applicable=True, holds=False, payload={"n": ctx.n})

    monkeypatch.setitem(suite_mod.CATALOG, "T1", always_fails)
    r = verify_suite("exhaustive:n=3", checks=["T1"])
    assert not r.ok and r.counts["T1"].failed == 8
    keys = [f["edges"] for f in r.failures]
    assert keys == sorted(keys)
    assert all(f["payload"] for f in r.failures)


class TestCorpusSpec:
    def test_defaults(self):
        spec = parse_corpus("random-ab")
        assert spec.get("count") == 1000 and spec.get("max_n") == 16

    def test_describe_round_trip(self):
        spec = parse_corpus("random-general:count=5,max_n=9,p=0.25")
        assert parse_corpus(spec.describe()) == spec

    @pytest.mark.parametrize(
        "bad",
        ["exhaustive", "exhaustive:n=9", "nonsense", "random-ab:min_n=2", "random-ab:foo=1",
         "random-general:count=x", "random-general:p=2"],
    )
    def test_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_corpus(bad)

    def test_members_are_pure_functions_of_the_index(self):
        spec = parse_corpus("random-general:count=10,max_n=8")
        assert corpus_graph(spec, 1, 7) == corpus_graph(spec, 1, 7)
        assert corpus_graph(spec, 1, 7) != corpus_graph(spec, 2, 7)

    def test_bounds_are_reported(self):
        r = verify_suite("exhaustive:n=2", bounds=OracleBounds(10, 11, 12))
        assert r.to_json()["bounds"] == {"subset_bound": 10, "omega_bound": 11, "matching_bound": 12}

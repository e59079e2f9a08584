import json

from oddcore.generators import cycle_graph, fixture, random_almost_bipartite_sized, random_general
from oddcore.graph import Graph
from oddcore.oracle import OracleBounds
from oddcore.workbench.report import analyze, oracle_summary

from .conftest import FIG1, FIG2, labels


def test_fig2(fig2):
    r = analyze(fig2)
    assert (r.alpha, r.mu, r.ke, r.d, r.core_deficiency) == (7, 6, False, 1, 1)
    assert set(r.core) == labels(FIG2, "ab")
    assert r.graph_class == "almost_bipartite" and r.all_consistent


def test_fig1(fig1):
    r = analyze(fig1)
    assert (r.alpha, r.mu, r.ke) == (6, 5, True)
    assert set(r.core) == labels(FIG1, "abc")
    assert r.d == r.alpha - r.mu == 1


def test_c5():
    r = analyze(cycle_graph(5))
    assert (r.alpha, r.mu, r.ke, r.core, r.d) == (2, 2, False, [], 0)


def test_json_schema(fig2):
    out = analyze(fig2).to_json()
    assert out["oddcore_report"] == 1 and out["class"] == "almost_bipartite"
    for key in ("n", "m", "components", "alpha", "mu", "alpha_plus_mu", "ke", "core", "corona", "ker",
                "n_of_core", "d", "id", "core_deficiency", "odd_cycle", "decomposition", "provenance"):
        assert key in out
    assert out["core"] == sorted(out["core"])
    json.dumps(out)


def test_provenance(fig2):
    r = analyze(fig2)
    assert r.provenance["alpha"] == "fast" and r.provenance["id"] == "oracle"
    r = analyze(fixture("k2n_minus_e(3)"))
    assert r.provenance["alpha"] == "oracle"


def test_partial_report_out_of_bound():
    g = random_general(30, 0.4, 2)
    r = analyze(g, OracleBounds.uniform(12))
    assert r.alpha is None and r.core is None and r.id is None and r.ker is None
    assert r.d is not None and r.notes
    assert all(v is not False for v in r.consistency.values())


def test_large_almost_bipartite_uses_fast_paths():
    g = random_almost_bipartite_sized(2, 1, 120, 120, pieces=3, detach_prob=0.0)
    r = analyze(g)
    assert r.alpha is not None and r.id is None
    assert r.all_consistent and r.consistency["difference_identity"] is not False


def test_every_small_graph_is_consistent():
    for seed in range(60):
        g = random_general(8, 0.35, seed)
        r = analyze(g)
        assert r.all_consistent, (g, r.consistency)
        assert None not in (r.alpha, r.mu, r.core, r.corona, r.ker, r.id)


def test_oracle_summary(fig2):
    s = oracle_summary(fig2)
    assert s["oddcore_oracle"] == 1
    assert (s["alpha"], s["mu"], s["d"], s["id"], s["ke"]) == (7, 6, 1, 1, False)
    assert oracle_summary(Graph(30))["alpha"] is None

import pytest

from oddcore.generators import cycle_graph, fixture, random_almost_bipartite_sized
from oddcore.graph import Graph
from oddcore.independence import is_alpha_critical_edge
from oddcore.oracle import OracleBounds
from oddcore.workbench.checks import CATALOG, CHECK_IDS, CheckResult, Context, check_theorem, parse_check_ids

from .conftest import FIG1


def test_t18_on_fig2(fig2):
    r = check_theorem("T18", fig2)
    assert r.applicable and r.holds


def test_t11_on_paw(paw):
    r = check_theorem("T11", paw)
    assert r.applicable and r.holds
    # paw is KE, so some cycle edge is not alpha-critical; deleting {1,2}
    # leaves a star, so that one is, while {0,1} and {0,2} are not
    assert is_alpha_critical_edge(paw, (1, 2))
    assert not is_alpha_critical_edge(paw, (0, 1)) and not is_alpha_critical_edge(paw, (0, 2))


def test_t7_on_fig1(fig1):
    ctx = Context(fig1)
    assert check_theorem("T7", fig1, ctx=ctx).holds
    assert all(m.saturates(FIG1["c"]) for m in ctx.max_matchings)


@pytest.mark.parametrize("name", ["fig1", "fig2", "paw", "tri_p2", "star3", "c5", "k2n_minus_e(3)"])
def test_catalog_holds_on_fixtures(name):
    g = fixture(name)
    ctx = Context(g)
    for cid in CHECK_IDS:
        r = check_theorem(cid, g, ctx=ctx)
        assert r.holds, (cid, r.payload)


def test_applicability():
    c4 = fixture("c4")
    assert not check_theorem("T9", c4).applicable
    assert check_theorem("T20", c4).applicable
    assert not check_theorem("T1", Graph(0)).applicable
    assert not check_theorem("T13", fixture("fig1")).applicable  # KE
    r = check_theorem("T2", Graph(20), OracleBounds.uniform(10))
    assert not r.applicable and "bound" in r.payload["reason"]


def test_failure_requires_payload():
    with pytest.raises(ValueError):
        CheckResult("T1", applicable=True, holds=False)


def test_checks_notice_a_wrong_core(fig2, monkeypatch):
    """Feed the context a corrupted core; the core-based checks must object."""
    ctx = Context(fig2)
    monkeypatch.setattr(Context, "core", property(lambda self: frozenset({0})), raising=False)
    for cid in ("T14", "T17", "T18"):
        r = check_theorem(cid, fig2, ctx=ctx)
        assert r.applicable and not r.holds and r.payload


def test_checks_notice_a_wrong_alpha(monkeypatch):
    g = cycle_graph(7)
    ctx = Context(g)
    ctx.__dict__["alpha"] = 5  # two more than the truth
    assert not check_theorem("T10", g, ctx=ctx).holds
    assert not check_theorem("T1", g, ctx=ctx).holds


def test_out_of_bound_route():
    g = random_almost_bipartite_sized(5, 0, 60, 60, pieces=2, detach_prob=0.0)
    ctx = Context(g)
    for cid in ("T9", "T10", "T11", "T12", "T14", "T15", "T16", "T17", "T18"):
        r = check_theorem(cid, g, ctx=ctx)
        assert r.holds, (cid, r.payload)
    assert not check_theorem("T5", g, ctx=ctx).applicable


class TestParseIds:
    def test_all(self):
        assert parse_check_ids("all") == CHECK_IDS == tuple(CATALOG)

    def test_list_and_range(self):
        assert parse_check_ids("T5,T1") == ("T1", "T5")
        assert parse_check_ids("T9-T12,3") == ("T3", "T9", "T10", "T11", "T12")

    @pytest.mark.parametrize("bad", ["T21", "X", "T0-T2"])
    def test_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_check_ids(bad)

"""Acceptance criteria 1-8.

Each test records a one-line verdict, printed in the pytest terminal
summary under "acceptance criteria". Set ODDCORE_EXTENDED=1 for the
optional exhaustive n=7 sweep.
"""

import os
import time

import pytest

from oddcore import oracle
from oddcore.cli import main as cli_main
from oddcore.critical import critical_difference
from oddcore.generators import fixture, k2n_minus_e, odd_cycle
from oddcore.graph import neighborhood
from oddcore.independence import core, corona, independence_number
from oddcore.matching import maximum_matching
from oddcore.oracle import OracleBounds
from oddcore.workbench.report import analyze
from oddcore.workbench.suite import corpus_graph, parse_corpus, verify_suite

from .acceptance_log import record
from .conftest import FIG1, FIG2, labels


def _timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def test_criterion_1_figure_two():
    g = fixture("fig2")
    rep, secs = _timed(lambda: analyze(g))
    got = {
        "alpha": rep.alpha, "mu": rep.mu, "ke": rep.ke, "core": set(rep.core),
        "n_of_core": set(rep.n_of_core), "d": rep.d, "id": rep.id, "alpha_plus_mu": rep.alpha_plus_mu,
    }
    want = {
        "alpha": 7, "mu": 6, "ke": False, "core": labels(FIG2, "ab"),
        "n_of_core": {FIG2["c"]}, "d": 1, "id": 1, "alpha_plus_mu": g.n - 1,
    }
    ok = got == want and g.n - 1 == 13 and secs < 1.0
    detail = f"fig2 alpha=7 mu=6 ke=False core={{a,b}} N(core)={{c}} d=id=1 alpha+mu=13 in {secs:.3f}s"
    if got != want:
        detail += f"; FIXTURE UNVERIFIED, got {got}"
    record(1, ok, detail)
    assert got == want, f"fig2 fixture unverified: {got}"
    assert secs < 1.0


def test_criterion_2_figure_one():
    g = fixture("fig1")

    def run():
        rep = analyze(g)
        return rep, oracle.oracle_maximum_matchings(g)

    (rep, matchings), secs = _timed(run)
    got = {"alpha": rep.alpha, "mu": rep.mu, "ke": rep.ke, "core": set(rep.core), "d": rep.d}
    want = {"alpha": 6, "mu": 5, "ke": True, "core": labels(FIG1, "abc"), "d": 1}
    identity = rep.d == rep.alpha - rep.mu == rep.core_deficiency
    saturate = bool(matchings) and all(m.saturates(FIG1["c"]) for m in matchings)
    ok = got == want and identity and saturate and secs < 1.0
    detail = (
        f"fig1 alpha=6 mu=5 ke=True core={{a,b,c}} d=alpha-mu=|core|-|N(core)|=1; "
        f"{len(matchings)} maximum matchings all saturate c; {secs:.3f}s"
    )
    if got != want:
        detail += f"; FIXTURE UNVERIFIED, got {got}"
    record(2, ok, detail)
    assert got == want, f"fig1 fixture unverified: {got}"
    assert identity and saturate and secs < 1.0


def test_criterion_3_complete_minus_edge():
    rows = []
    for n in (3, 4, 5):
        g = k2n_minus_e(n)
        rep = analyze(g)
        rows.append(
            rep.d == 0
            and rep.alpha == 2
            and rep.mu == n
            and rep.core_deficiency == 2 - (2 * n - 2)
            and rep.alpha - rep.mu == 2 - n
        )
    ok = all(rows)
    record(3, ok, "K_2n - e, n=3,4,5: d=0, alpha=2, mu=n, |core|-|N(core)|=4-2n")
    assert ok


def test_criterion_4_odd_cycles():
    bad = []
    for k in range(1, 11):
        g = odd_cycle(k)
        a, m = independence_number(g), maximum_matching(g).size
        c = core(g)
        ke = a + m == g.n
        if (a, m, a + m, ke, c, critical_difference(g)) != (k, k, g.n - 1, False, frozenset(), 0):
            bad.append(k)
    record(4, not bad, f"C_(2k+1), k=1..10: alpha=mu=k, alpha+mu=n-1, non-KE, core empty, d=0; bad k={bad}")
    assert not bad


def test_criterion_5_exhaustive_six():
    rep = verify_suite("exhaustive:n=6", checks="T1 T2 T3 T4 T5 T6 T7 T8 T9 T10 T11 T12 T13 T14 T15 T16 T17 T18 T19 T20".split())
    ok = rep.graphs == 2**15 and rep.ok and rep.duration_s <= 300
    applicable = sum(k.applicable for k in rep.counts.values())
    record(
        5,
        ok,
        f"exhaustive n=6: {rep.graphs} graphs, T1-T20, {applicable} applicable results, "
        f"{rep.failed} failures, {rep.duration_s:.1f}s (budget 300s)",
    )
    assert rep.graphs == 2**15
    assert rep.ok, rep.failures[:3]
    assert rep.duration_s <= 300


@pytest.mark.skipif(not os.environ.get("ODDCORE_EXTENDED"), reason="set ODDCORE_EXTENDED=1 for the n=7 sweep")
def test_criterion_5_extended_exhaustive_seven():
    rep = verify_suite("exhaustive:n=7", jobs=os.cpu_count() or 1)
    print(f"exhaustive n=7: {rep.graphs} graphs, {rep.failed} failures, {rep.duration_s:.0f}s")
    assert rep.ok, rep.failures[:3]


def test_criterion_6_oracle_equivalence():
    seed = 20240601
    ab = parse_corpus("random-ab:count=1000,min_n=3,max_n=16")
    mismatches = {"alpha": 0, "mu": 0, "core": 0, "corona": 0, "d": 0}
    for i in range(1000):
        _, g = corpus_graph(ab, seed, i)
        ocore, ocorona, _ = oracle.oracle_core_corona_ker(g)
        mismatches["alpha"] += independence_number(g) != oracle.oracle_alpha(g)
        mismatches["mu"] += maximum_matching(g).size != oracle.oracle_mu(g)
        mismatches["core"] += core(g) != ocore
        mismatches["corona"] += corona(g) != ocorona
        mismatches["d"] += critical_difference(g) != oracle.oracle_d_all_subsets(g)

    gen = parse_corpus("random-general:count=200,min_n=1,max_n=14")
    d_bad = id_bad = 0
    for i in range(200):
        _, g = corpus_graph(gen, seed, i)
        d = critical_difference(g)
        d_bad += d != oracle.oracle_d_all_subsets(g)
        id_bad += d != oracle.oracle_id(g)

    ok = not any(mismatches.values()) and d_bad == 0 and id_bad == 0
    record(
        6,
        ok,
        f"1000 almost-bipartite n<=16 mismatches {mismatches}; 200 general n<=14: "
        f"d vs all-subsets {d_bad}, d vs id {id_bad}",
    )
    assert ok


def test_criterion_7_scale():
    checks = ["T9", "T10", "T11", "T12", "T14", "T17", "T18"]
    # bounds of 1 keep every oracle out of the run
    rep = verify_suite(
        "random-ab:count=100,min_n=190,max_n=210,pieces=3,detach=0.1",
        checks=checks,
        seed=7,
        bounds=OracleBounds.uniform(1),
    )
    counts = ", ".join(f"{c} {k.passed}/{k.applicable}" for c, k in rep.counts.items())
    ok = rep.graphs == 100 and rep.ok and rep.duration_s < 60
    record(7, ok, f"100 almost-bipartite graphs n=190..210, fast paths only: {counts}; {rep.duration_s:.1f}s (limit 60s)")
    assert rep.ok, rep.failures[:3]
    assert rep.duration_s < 60
    # the run must exercise the non-KE statements, not pass them vacuously
    assert rep.counts["T14"].applicable and rep.counts["T18"].applicable


def test_criterion_8_determinism(tmp_path):
    outs = []
    for name in ("first.json", "second.json"):
        path = tmp_path / name
        code = cli_main([
            "verify", "--corpus", "random-ab:count=150,min_n=3,max_n=14", "--checks", "all",
            "--seed", "42", "--jobs", "2", "--out", str(path),
        ])
        assert code == 0
        outs.append(path.read_bytes())
    same = outs[0] == outs[1]
    record(8, same, f"oddcore verify twice (seed 42, jobs 2): {len(outs[0])} bytes, identical={same}")
    assert same

"""Corpus verification: run a set of checks over many graphs.

A corpus is described by a short spec string::

    exhaustive:n=6
    random-ab:count=1000,min_n=3,max_n=16[,cross=0.2][,pieces=3][,detach=0.1]
    random-general:count=200,min_n=1,max_n=14[,p=0.3]
    fixtures

Graph ``i`` of a corpus is a pure function of ``(spec, seed, i)``, so
workers rebuild their graphs locally and the report does not depend on how
the work was split.
"""

from __future__ import annotations

import json
import multiprocessing
import time
from dataclasses import dataclass, field
from typing import Any, Optional

from .. import generators, oracle
from ..graph import Graph, format_edge_list
from ..oracle import OracleBounds
from .checks import CATALOG, Context, check_theorem

SUITE_VERSION = 1
KINDS = ("exhaustive", "random-ab", "random-general", "fixtures")


@dataclass(frozen=True)
class CorpusSpec:
    kind: str
    params: tuple[tuple[str, float], ...] = ()

    def get(self, key: str, default=None):
        return dict(self.params).get(key, default)

    def describe(self) -> str:
        if not self.params:
            return self.kind
        return self.kind + ":" + ",".join(f"{k}={_fmt(v)}" for k, v in self.params)


def _fmt(v: float) -> str:
    return str(int(v)) if float(v).is_integer() else repr(float(v))


_ALLOWED = {
    "exhaustive": {"n"},
    "random-ab": {"count", "min_n", "max_n", "cross", "pieces", "detach"},
    "random-general": {"count", "min_n", "max_n", "p"},
    "fixtures": set(),
}
_DEFAULTS = {
    "random-ab": {"count": 1000, "min_n": 3, "max_n": 16, "cross": 0.2},
    "random-general": {"count": 200, "min_n": 1, "max_n": 14},
}


def parse_corpus(text: str) -> CorpusSpec:
    kind, _, rest = text.strip().partition(":")
    kind = kind.strip().lower()
    if kind not in _ALLOWED:
        raise ValueError(f"unknown corpus kind {kind!r}; expected one of {', '.join(KINDS)}")
    params = dict(_DEFAULTS.get(kind, {}))
    for item in filter(None, (p.strip() for p in rest.split(","))):
        key, eq, val = item.partition("=")
        key = key.strip()
        if not eq or key not in _ALLOWED[kind]:
            raise ValueError(f"bad corpus parameter {item!r} for {kind}")
        try:
            params[key] = float(val) if key in ("p", "cross", "detach") else int(val)
        except ValueError:
            raise ValueError(f"bad value in corpus parameter {item!r}") from None
    if kind == "exhaustive":
        if "n" not in params:
            raise ValueError("exhaustive corpus needs n=<int>")
        if not 0 <= params["n"] <= generators.ENUMERATION_LIMIT:
            raise ValueError(f"exhaustive corpus supports 0 <= n <= {generators.ENUMERATION_LIMIT}")
    if kind.startswith("random"):
        if params["count"] < 0 or not 1 <= params["min_n"] <= params["max_n"]:
            raise ValueError("random corpus needs count >= 0 and 1 <= min_n <= max_n")
        if kind == "random-ab" and params["min_n"] < 3:
            raise ValueError("random-ab needs min_n >= 3")
        for key in ("p", "cross", "detach"):
            if key in params and not 0.0 <= params[key] <= 1.0:
                raise ValueError(f"{key} must lie in [0, 1]")
        if params.get("pieces", 0) < 0:
            raise ValueError("pieces must be non-negative")
    return CorpusSpec(kind, tuple(sorted(params.items())))


def corpus_size(spec: CorpusSpec) -> int:
    if spec.kind == "exhaustive":
        return generators.labeled_graph_count(int(spec.get("n")))
    if spec.kind == "fixtures":
        return len(generators.default_fixture_corpus())
    return int(spec.get("count"))


def corpus_graph(spec: CorpusSpec, seed: int, index: int) -> tuple[str, Graph]:
    """The ``index``-th member of the corpus and a short label for it."""
    if spec.kind == "exhaustive":
        n = int(spec.get("n"))
        g = next(generators.enumerate_labeled_graphs(n, index, index + 1))
        return f"mask={index}", g
    if spec.kind == "fixtures":
        return generators.default_fixture_corpus()[index]
    lo, hi = int(spec.get("min_n")), int(spec.get("max_n"))
    if spec.kind == "random-ab":
        pieces = spec.get("pieces")
        g = generators.random_almost_bipartite_sized(
            seed,
            index,
            lo,
            hi,
            float(spec.get("cross")),
            pieces=None if pieces is None else int(pieces),
            detach_prob=float(spec.get("detach", 1 / 6)),
        )
        return f"random-ab#{index}", g
    gen = generators.rng(seed, 2, index)
    n = int(gen.integers(lo, hi + 1))
    p = spec.get("p")
    p = float(gen.uniform(0.1, 0.7)) if p is None else float(p)
    return f"random-general#{index}", generators.random_general(n, p, seed, 3, index)


def corpus_graphs(spec: CorpusSpec, seed: int = 0):
    for i in range(corpus_size(spec)):
        yield corpus_graph(spec, seed, i)


@dataclass
class CheckCounts:
    passed: int = 0
    failed: int = 0
    inapplicable: int = 0

    @property
    def applicable(self) -> int:
        return self.passed + self.failed


@dataclass
class SuiteReport:
    corpus: str
    seed: int
    checks: tuple[str, ...]
    bounds: OracleBounds
    graphs: int = 0
    counts: dict[str, CheckCounts] = field(default_factory=dict)
    failures: list[dict[str, Any]] = field(default_factory=list)
    duration_s: float = 0.0

    @property
    def failed(self) -> int:
        return sum(c.failed for c in self.counts.values())

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self, include_timing: bool = False) -> dict[str, Any]:
        out: dict[str, Any] = {
            "oddcore_suite": SUITE_VERSION,
            "corpus": self.corpus,
            "seed": self.seed,
            "bounds": {
                "subset_bound": self.bounds.subset_bound,
                "omega_bound": self.bounds.omega_bound,
                "matching_bound": self.bounds.matching_bound,
            },
            "checks": list(self.checks),
            "graphs": self.graphs,
            "counts": {
                c: {"pass": k.passed, "fail": k.failed, "inapplicable": k.inapplicable}
                for c, k in self.counts.items()
            },
            "failures": self.failures,
        }
        if include_timing:
            out["duration_s"] = round(self.duration_s, 3)
        return out

    def dumps(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_json(include_timing), indent=2, sort_keys=False) + "\n"

    def summary_lines(self) -> list[str]:
        lines = [f"corpus {self.corpus} seed={self.seed}: {self.graphs} graphs"]
        for c, k in self.counts.items():
            lines.append(f"  {c:>4}  pass {k.passed:>7}  fail {k.failed:>5}  n/a {k.inapplicable:>7}")
        lines.append("ALL PASS" if self.ok else f"{self.failed} FAILURE(S)")
        return lines


def _run_one(job: tuple[CorpusSpec, int, tuple[str, ...], OracleBounds, int]):
    spec, seed, checks, bounds, index = job
    label, g = corpus_graph(spec, seed, index)
    ctx = Context(g, bounds)
    outcome = []
    fails = []
    for cid in checks:
        r = check_theorem(cid, g, bounds, ctx)
        if not r.applicable:
            outcome.append(2)
        elif r.holds:
            outcome.append(0)
        else:
            outcome.append(1)
            fails.append({"check": cid, "graph": label, "edges": format_edge_list(g), "payload": r.payload})
    return outcome, fails


def verify_suite(
    corpus: CorpusSpec | str,
    checks: tuple[str, ...] | list[str] = tuple(CATALOG),
    seed: int = 0,
    bounds: Optional[OracleBounds] = None,
    jobs: int = 1,
) -> SuiteReport:
    """Run ``checks`` on every corpus graph, optionally across ``jobs`` processes."""
    spec = parse_corpus(corpus) if isinstance(corpus, str) else corpus
    bounds = bounds or oracle.DEFAULT_BOUNDS
    checks = tuple(checks)
    report = SuiteReport(spec.describe(), seed, checks, bounds, counts={c: CheckCounts() for c in checks})
    total = corpus_size(spec)
    jobs_iter = ((spec, seed, checks, bounds, i) for i in range(total))
    start = time.perf_counter()
    if jobs > 1 and total > 1:
        with multiprocessing.get_context("spawn").Pool(jobs) as pool:
            results = pool.imap(_run_one, jobs_iter, chunksize=max(1, min(512, total // (8 * jobs) or 1)))
            _collect(report, results)
    else:
        _collect(report, map(_run_one, jobs_iter))
    report.duration_s = time.perf_counter() - start
    report.failures.sort(key=lambda f: (f["edges"], int(f["check"][1:]), f["graph"]))
    return report


def _collect(report: SuiteReport, results) -> None:
    for outcome, fails in results:
        report.graphs += 1
        for cid, code in zip(report.checks, outcome):
            k = report.counts[cid]
            if code == 0:
                k.passed += 1
            elif code == 1:
                k.failed += 1
            else:
                k.inapplicable += 1
        report.failures.extend(fails)


__all__ = [
    "CheckCounts",
    "CorpusSpec",
    "SuiteReport",
    "corpus_graph",
    "corpus_graphs",
    "corpus_size",
    "parse_corpus",
    "verify_suite",
]

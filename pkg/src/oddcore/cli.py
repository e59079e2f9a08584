"""Command line entry point: ``oddcore analyze | gen | verify | oracle``.

Exit codes: 0 success, 1 a check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import generators
from .errors import OddcoreError
from .graph import Graph, format_edge_list, parse_edge_list
from .oracle import OracleBounds
from .workbench.checks import parse_check_ids
from .workbench.report import analyze, oracle_summary
from .workbench.suite import parse_corpus, verify_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

MODELS = ("almost-bipartite", "almost-bipartite-sized", "bipartite", "general", "fixture")


class InputError(Exception):
    pass


def _load_graph(source: str) -> Graph:
    """A path, ``-`` for stdin, or ``fixture:<name>``."""
    if source.startswith("fixture:"):
        return generators.fixture(source.split(":", 1)[1])
    if source == "-":
        return parse_edge_list(sys.stdin.read())
    try:
        text = Path(source).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror or exc}") from None
    return parse_edge_list(text)


def _bounds(arg: Optional[int]) -> OracleBounds:
    try:
        base = OracleBounds.from_env()
    except ValueError as exc:
        raise InputError(f"bad ODDCORE_ORACLE_BOUND: {exc}") from None
    return OracleBounds.uniform(arg) if arg is not None else base


def _params(items: Sequence[str]) -> dict[str, str]:
    out = {}
    for item in items:
        key, eq, val = item.partition("=")
        if not eq or not key:
            raise InputError(f"expected key=value, got {item!r}")
        out[key.replace("-", "_")] = val
    return out


def _take(params: dict[str, str], key: str, conv, default):
    if key not in params:
        return default
    raw = params.pop(key)
    try:
        return conv(raw)
    except ValueError:
        raise InputError(f"bad value for {key}: {raw!r}") from None


def _flag(raw: str) -> bool:
    low = raw.lower()
    if low in ("1", "true", "yes"):
        return True
    if low in ("0", "false", "no"):
        return False
    raise ValueError(raw)


def _pair(raw: str) -> tuple[int, int]:
    lo, _, hi = raw.partition(",")
    return int(lo), int(hi or lo)


def generate(model: str, seed: int, params: dict[str, str]) -> Graph:
    p = dict(params)
    if model == "almost-bipartite":
        m = generators.AlmostBipartiteModel(
            cycle_len=_take(p, "cycle_len", int, 5),
            pieces=_take(p, "pieces", int, 2),
            piece_size=_take(p, "piece_size", _pair, (1, 4)),
            cross_edge_prob=_take(p, "cross", float, 0.2),
            extra_bipartite_components=_take(p, "extra", int, 0),
            seed=seed,
            shuffle=_take(p, "shuffle", _flag, True),
        )
        g = generators.random_almost_bipartite(m)
    elif model == "almost-bipartite-sized":
        pieces = _take(p, "pieces", int, None)
        g = generators.random_almost_bipartite_sized(
            seed,
            _take(p, "index", int, 0),
            _take(p, "min_n", int, 3),
            _take(p, "max_n", int, 16),
            _take(p, "cross", float, 0.2),
            pieces=pieces,
            detach_prob=_take(p, "detach", float, 1 / 6),
        )
    elif model == "bipartite":
        g = generators.random_bipartite(
            _take(p, "nl", int, 4),
            _take(p, "nr", int, 4),
            _take(p, "p", float, 0.4),
            _take(p, "connected", _flag, False),
            seed,
        )
    elif model == "general":
        g = generators.random_general(_take(p, "n", int, 8), _take(p, "p", float, 0.3), seed)
    elif model == "fixture":
        if "name" not in p:
            raise InputError("fixture model needs name=<fixture>")
        g = generators.fixture(p.pop("name"))
    else:
        raise InputError(f"unknown model {model!r}; expected one of {', '.join(MODELS)}")
    if p:
        raise InputError(f"unused parameters for {model}: {', '.join(sorted(p))}")
    return g


def _write(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _fmt_set(values) -> str:
    return "{" + ", ".join(map(str, values)) + "}"


def _analysis_text(rep) -> str:
    lines = [f"n={rep.n} m={rep.m} class={rep.graph_class} components={rep.components}"]
    for key in ("alpha", "mu", "alpha_plus_mu", "ke", "d", "id", "core_deficiency"):
        val = getattr(rep, key)
        lines.append(f"{key}: {'n/a' if val is None else val}")
    for key in ("core", "n_of_core", "corona", "ker", "critical_set", "critical_independent_set"):
        val = getattr(rep, key)
        lines.append(f"{key}: {'n/a' if val is None else _fmt_set(val)}")
    if rep.odd_cycle:
        lines.append("odd_cycle: " + " - ".join(map(str, rep.odd_cycle)))
    flags = ", ".join(f"{k}={'n/a' if v is None else ('ok' if v else 'VIOLATED')}" for k, v in rep.consistency.items())
    lines.append(f"consistency: {flags}")
    lines.extend(f"note: {n}" for n in rep.notes)
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    g = _load_graph(args.file)
    rep = analyze(g, _bounds(args.oracle_bound))
    if args.json:
        _write(json.dumps(rep.to_json(), indent=2) + "\n", None)
    else:
        _write(_analysis_text(rep), None)
    return EXIT_OK if rep.all_consistent else EXIT_FAIL


def cmd_gen(args) -> int:
    g = generate(args.model, args.seed, _params(args.params))
    _write(format_edge_list(g), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    corpus = parse_corpus(args.corpus)
    checks = parse_check_ids(args.checks)
    if args.jobs < 1:
        raise InputError("--jobs must be at least 1")
    report = verify_suite(corpus, checks, args.seed, _bounds(args.oracle_bound), args.jobs)
    _write(report.dumps(include_timing=args.timing), args.out)
    for line in report.summary_lines():
        print(line, file=sys.stderr)
    print(f"duration {report.duration_s:.2f}s", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_oracle(args) -> int:
    g = _load_graph(args.file)
    _write(json.dumps(oracle_summary(g, _bounds(args.oracle_bound)), indent=2) + "\n", None)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="oddcore", description="Exact independence and matching invariants.")
    sub = parser.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="report every invariant of one graph")
    a.add_argument("file", help="edge-list file, '-' for stdin, or fixture:<name>")
    a.add_argument("--json", action="store_true")
    a.add_argument("--oracle-bound", type=int)
    a.set_defaults(func=cmd_analyze)

    gp = sub.add_parser("gen", help="emit a generated graph as an edge list")
    gp.add_argument("--model", required=True, choices=MODELS)
    gp.add_argument("--seed", type=int, default=0)
    gp.add_argument("--out")
    gp.add_argument("params", nargs="*", metavar="key=value")
    gp.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="run theorem checks over a corpus")
    v.add_argument("--corpus", required=True, help="exhaustive:n=6 | random-ab:count=..,min_n=..,max_n=.. | "
                   "random-general:count=..,max_n=.. | fixtures")
    v.add_argument("--checks", default="all")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--oracle-bound", type=int)
    v.add_argument("--out")
    v.add_argument("--timing", action="store_true", help="include wall-clock duration in the JSON")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="brute-force values only")
    o.add_argument("file")
    o.add_argument("--oracle-bound", type=int)
    o.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, OddcoreError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"oddcore: error: {msg}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

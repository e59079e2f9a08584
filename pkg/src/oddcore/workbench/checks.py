"""Theorem checks T1-T20.

Each check evaluates one statement on one graph. Inputs come from the
oracles whenever the graph is inside the oracle bounds; otherwise from the
most independent fast route available (for instance the core is taken from
vertex-deletion alpha queries, never from the piece-union rule that T14
is checking). A check that does not apply returns ``applicable=False``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Optional

from .. import critical, independence, oracle
from ..errors import TooLargeError
from ..graph import (
    Edge,
    Graph,
    VertexSet,
    component_masks,
    from_mask,
    induced,
    iter_bits,
    neighborhood_mask,
    remove_edge,
    remove_vertices,
    to_mask,
)
from ..matching import Matching, matching_from_into, maximum_matching
from ..oracle import OracleBounds
from ..structure import ClassTag, classify, decompose, is_unicyclic

CHECK_IDS = tuple(f"T{i}" for i in range(1, 21))


@dataclass
class CheckResult:
    check: str
    applicable: bool
    holds: bool = True
    payload: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if not self.holds and not self.payload:
            raise ValueError(f"{self.check}: a failing result needs a counterexample payload")


class Context:
    """Lazily computed, oracle-grade quantities for one graph."""

    def __init__(self, g: Graph, bounds: OracleBounds = oracle.DEFAULT_BOUNDS):
        self.g = g
        self.bounds = bounds
        self.cls = classify(g)
        self.n = g.n

    # bound predicates -----------------------------------------------------
    @property
    def subset_ok(self) -> bool:
        return self.n <= self.bounds.subset_bound

    @property
    def omega_ok(self) -> bool:
        return self.n <= self.bounds.omega_bound

    @property
    def matching_ok(self) -> bool:
        return self.n <= self.bounds.matching_bound

    # derived-graph helpers --------------------------------------------------
    def alpha_of(self, h: Graph) -> int:
        if h.n <= self.bounds.subset_bound:
            return oracle.oracle_alpha(h, self.bounds)
        if classify(h).tag is ClassTag.OTHER:
            return independence.independence_number(h)
        # cycle-vertex branching, independent of the attachment KE criterion
        return independence.alpha_engine(h).alpha_without(0)

    def mu_of(self, h: Graph) -> int:
        if h.n <= self.bounds.matching_bound:
            return oracle.oracle_mu(h, self.bounds)
        return maximum_matching(h).size

    def core_of(self, h: Graph) -> VertexSet:
        if h.n <= self.bounds.omega_bound:
            return oracle.oracle_core_corona_ker(h, self.bounds)[0]
        return independence.core_by_deletion(h)

    # invariants ----------------------------------------------------------
    @cached_property
    def alpha(self) -> int:
        return self.alpha_of(self.g)

    @cached_property
    def mu(self) -> int:
        return self.mu_of(self.g)

    @cached_property
    def ke(self) -> bool:
        return self.alpha + self.mu == self.n

    @cached_property
    def omega(self) -> Optional[list[int]]:
        if not self.omega_ok:
            return None
        return [to_mask(s) for s in oracle.oracle_omega(self.g, self.bounds)]

    @cached_property
    def _ccc(self) -> tuple[VertexSet, VertexSet, VertexSet]:
        return oracle.oracle_core_corona_ker(self.g, self.bounds)

    @cached_property
    def core(self) -> VertexSet:
        return self._ccc[0] if self.omega_ok else independence.core_by_deletion(self.g)

    @cached_property
    def corona(self) -> VertexSet:
        return self._ccc[1] if self.omega_ok else independence.corona(self.g)

    @property
    def ker(self) -> Optional[VertexSet]:
        return self._ccc[2] if self.omega_ok else None

    @cached_property
    def n_core(self) -> VertexSet:
        return from_mask(neighborhood_mask(self.g, to_mask(self.core)))

    @cached_property
    def core_deficiency(self) -> int:
        return len(self.core) - len(self.n_core)

    @cached_property
    def d(self) -> int:
        if self.subset_ok:
            return oracle.oracle_d_all_subsets(self.g, self.bounds)
        return critical.critical_difference(self.g)

    @cached_property
    def id(self) -> Optional[int]:
        return oracle.oracle_id(self.g, self.bounds) if self.subset_ok else None

    @cached_property
    def max_matchings(self) -> Optional[list[Matching]]:
        return oracle.oracle_maximum_matchings(self.g, self.bounds) if self.matching_ok else None

    @cached_property
    def components(self) -> int:
        return len(component_masks(self.g))

    @cached_property
    def connected(self) -> bool:
        return self.components <= 1

    @cached_property
    def cycle_edges(self) -> tuple[Edge, ...]:
        return decompose(self.g).cycle_edges

    def alpha_minus_edge(self, e: Edge) -> int:
        return self.alpha_of(remove_edge(self.g, *e))

    def mu_minus_edge(self, e: Edge) -> int:
        return self.mu_of(remove_edge(self.g, *e))

    def has_matching_into(self, a: VertexSet, b: VertexSet) -> bool:
        if len(a) <= 12:
            return oracle.oracle_has_matching_into(self.g, a, b)
        return matching_from_into(self.g, a, b) is not None

    @cached_property
    def piece_cores(self) -> dict[VertexSet, VertexSet]:
        out = {}
        for piece in decompose(self.g).pieces:
            h, old = induced(self.g, piece)
            out[piece] = frozenset(old[i] for i in self.core_of(h))
        return out


def _s(vs) -> list[int]:
    return sorted(vs)


def _na(check: str, why: str) -> CheckResult:
    return CheckResult(check, applicable=False, payload={"reason": why})


def _verdict(check: str, ok: bool, payload: dict[str, Any]) -> CheckResult:
    return CheckResult(check, applicable=True, holds=bool(ok), payload={} if ok else payload)


def _is_ab(ctx: Context) -> bool:
    return ctx.cls.tag is ClassTag.ALMOST_BIPARTITE


# ---------------------------------------------------------------------------
# the catalog


def t1(ctx: Context) -> CheckResult:
    if ctx.n == 0:
        return _na("T1", "empty graph")
    s = ctx.alpha + ctx.mu
    ok = ctx.n // 2 + 1 <= s <= ctx.n
    return _verdict("T1", ok, {"alpha": ctx.alpha, "mu": ctx.mu, "n": ctx.n})


def t2(ctx: Context) -> CheckResult:
    if not ctx.subset_ok:
        return _na("T2", "out of subset bound")
    return _verdict("T2", ctx.d == ctx.id, {"d": ctx.d, "id": ctx.id})


def t3(ctx: Context) -> CheckResult:
    if not ctx.omega_ok:
        return _na("T3", "out of omega bound")
    ker, core = ctx.ker, ctx.core
    ok = ker <= core and (ker == core or not ctx.cls.is_bipartite)
    return _verdict("T3", ok, {"ker": _s(ker), "core": _s(core), "bipartite": ctx.cls.is_bipartite})


def t4(ctx: Context) -> CheckResult:
    if not ctx.subset_ok:
        return _na("T4", "out of subset bound")
    closed = to_mask(ctx.core) | neighborhood_mask(ctx.g, to_mask(ctx.core))
    if not closed:
        return _verdict("T4", True, {})
    bad = [
        e
        for e in ctx.g.edges
        if (closed >> e[0] & 1 or closed >> e[1] & 1) and ctx.alpha_minus_edge(e) > ctx.alpha
    ]
    return _verdict("T4", not bad, {"alpha_critical_edges_touching_N[core]": [list(e) for e in bad]})


def t5(ctx: Context) -> CheckResult:
    if ctx.omega is None:
        return _na("T5", "out of omega bound")
    core, corona = to_mask(ctx.core), to_mask(ctx.corona)
    for s in ctx.omega:
        a, b = from_mask(s & ~core), from_mask(corona & ~s)
        if not ctx.has_matching_into(a, b):
            return _verdict("T5", False, {"S": _s(from_mask(s)), "from": _s(a), "into": _s(b)})
    return _verdict("T5", True, {})


def t6(ctx: Context) -> CheckResult:
    if not (ctx.cls.is_bipartite and ctx.connected and ctx.n >= 2):
        return _na("T6", "needs connected bipartite, n >= 2")
    ok = (2 * ctx.alpha > ctx.n) == (len(ctx.core) >= 2)
    return _verdict("T6", ok, {"alpha": ctx.alpha, "n": ctx.n, "core": _s(ctx.core)})


def t7(ctx: Context) -> CheckResult:
    if not ctx.ke:
        return _na("T7", "not KE")
    if ctx.max_matchings is None:
        return _na("T7", "out of matching bound")
    core = ctx.core
    for m in ctx.max_matchings:
        stray = [v for v in ctx.n_core if m.mate(v) not in core]
        if stray:
            return _verdict(
                "T7", False, {"matching": [list(e) for e in m.sorted_edges()], "unmatched_into_core": stray}
            )
    return _verdict("T7", True, {})


def t8(ctx: Context) -> CheckResult:
    if not ctx.ke:
        return _na("T8", "not KE")
    ok = ctx.d == ctx.core_deficiency == ctx.alpha - ctx.mu
    return _verdict("T8", ok, {"d": ctx.d, "core_deficiency": ctx.core_deficiency, "alpha_minus_mu": ctx.alpha - ctx.mu})


def t9(ctx: Context) -> CheckResult:
    if not _is_ab(ctx):
        return _na("T9", "not almost bipartite")
    mus = {e: ctx.mu_minus_edge(e) for e in ctx.cycle_edges}
    ok = any(v == ctx.mu for v in mus.values()) and all(v <= ctx.mu for v in mus.values())
    return _verdict("T9", ok, {"mu": ctx.mu, "mu_minus_edge": {f"{u}-{v}": m for (u, v), m in mus.items()}})


def t10(ctx: Context) -> CheckResult:
    if not _is_ab(ctx):
        return _na("T10", "not almost bipartite")
    s = ctx.alpha + ctx.mu
    return _verdict("T10", ctx.n - 1 <= s <= ctx.n, {"alpha": ctx.alpha, "mu": ctx.mu, "n": ctx.n})


def t11(ctx: Context) -> CheckResult:
    if not _is_ab(ctx):
        return _na("T11", "not almost bipartite")
    crit = {e: ctx.alpha_minus_edge(e) > ctx.alpha for e in ctx.cycle_edges}
    ok = (ctx.alpha + ctx.mu == ctx.n - 1) == all(crit.values())
    return _verdict(
        "T11",
        ok,
        {"alpha_plus_mu": ctx.alpha + ctx.mu, "n": ctx.n, "alpha_critical": {f"{u}-{v}": c for (u, v), c in crit.items()}},
    )


def t12(ctx: Context) -> CheckResult:
    if not _is_ab(ctx):
        return _na("T12", "not almost bipartite")
    dec = decompose(ctx.g)
    hits = [a.x for a in dec.attach if a.x in ctx.piece_cores[a.piece]]
    n1 = to_mask(dec.n1)
    if ctx.omega is not None:
        avoiding = [s for s in ctx.omega if not s & n1]
        avoid = bool(avoiding)
    else:
        avoid = ctx.alpha_of(remove_vertices(ctx.g, dec.n1)) == ctx.alpha
    ok = (ctx.ke == bool(hits)) and ((not ctx.ke) == avoid)
    return _verdict("T12", ok, {"ke": ctx.ke, "x_in_core_of_piece": hits, "omega_member_avoiding_n1": avoid})


def t13(ctx: Context) -> CheckResult:
    if not _is_ab(ctx) or ctx.ke:
        return _na("T13", "needs almost bipartite non-KE")
    if ctx.omega is None:
        return _na("T13", "out of omega bound")
    for piece in decompose(ctx.g).pieces:
        pm = to_mask(piece)
        trace = {s & pm for s in ctx.omega}
        h, old = induced(ctx.g, piece)
        own = {to_mask(old[i] for i in s) for s in oracle.oracle_omega(h, ctx.bounds)}
        if trace != own:
            return _verdict(
                "T13",
                False,
                {"piece": _s(piece), "trace": sorted(_s(from_mask(t)) for t in trace), "omega_piece": sorted(_s(from_mask(t)) for t in own)},
            )
    return _verdict("T13", True, {})


def t14(ctx: Context) -> CheckResult:
    if not _is_ab(ctx) or ctx.ke or not ctx.connected:
        return _na("T14", "needs connected almost bipartite non-KE")
    union: set[int] = set()
    for c in ctx.piece_cores.values():
        union |= c
    cyc = to_mask(decompose(ctx.g).cycle)
    closed = cyc | neighborhood_mask(ctx.g, cyc)
    ok = ctx.core == frozenset(union) and not to_mask(ctx.core) & closed
    return _verdict("T14", ok, {"core": _s(ctx.core), "union_of_piece_cores": _s(union)})


def t15(ctx: Context) -> CheckResult:
    if not _is_ab(ctx) or not ctx.connected:
        return _na("T15", "needs connected almost bipartite")
    exists = ctx.has_matching_into(ctx.n_core, ctx.core)
    some_max: Optional[bool] = None
    if ctx.max_matchings is not None:
        some_max = any(all(m.mate(v) in ctx.core for v in ctx.n_core) for m in ctx.max_matchings)
    ok = ctx.mu <= ctx.alpha and exists and some_max is not False
    return _verdict(
        "T15",
        ok,
        {"alpha": ctx.alpha, "mu": ctx.mu, "matching_into_core": exists, "some_maximum_matching_into_core": some_max},
    )


def t16(ctx: Context) -> CheckResult:
    if not ctx.has_matching_into(ctx.n_core, ctx.core):
        return _na("T16", "no matching from N(core) into core")
    ok = ctx.alpha - ctx.mu <= ctx.core_deficiency
    return _verdict("T16", ok, {"alpha_minus_mu": ctx.alpha - ctx.mu, "core_deficiency": ctx.core_deficiency})


def t17(ctx: Context) -> CheckResult:
    if not _is_ab(ctx) or not ctx.connected:
        return _na("T17", "needs connected almost bipartite")
    am = ctx.alpha - ctx.mu
    ok = am <= ctx.core_deficiency == ctx.d <= am + 1
    return _verdict("T17", ok, {"alpha_minus_mu": am, "core_deficiency": ctx.core_deficiency, "d": ctx.d})


def t18(ctx: Context) -> CheckResult:
    if not _is_ab(ctx) or ctx.ke:
        return _na("T18", "needs almost bipartite non-KE")
    ok = ctx.d == ctx.alpha - ctx.mu == ctx.core_deficiency
    return _verdict("T18", ok, {"d": ctx.d, "alpha_minus_mu": ctx.alpha - ctx.mu, "core_deficiency": ctx.core_deficiency})


def t19(ctx: Context) -> CheckResult:
    if not is_unicyclic(ctx.g) or ctx.ke:
        return _na("T19", "needs unicyclic non-KE")
    return _verdict("T19", ctx.d == ctx.alpha - ctx.mu, {"d": ctx.d, "alpha_minus_mu": ctx.alpha - ctx.mu})


def t20(ctx: Context) -> CheckResult:
    if not ctx.cls.is_bipartite:
        return _na("T20", "not bipartite")
    if ctx.max_matchings is None or not ctx.omega_ok:
        return _na("T20", "out of bound")
    for v in ctx.g.vertices:
        missed = any(not m.saturates(v) for m in ctx.max_matchings)
        if missed != (v in ctx.core):
            return _verdict("T20", False, {"vertex": v, "in_core": v in ctx.core, "missed_by_some_max_matching": missed})
    return _verdict("T20", True, {})


CATALOG: dict[str, Callable[[Context], CheckResult]] = {
    "T1": t1, "T2": t2, "T3": t3, "T4": t4, "T5": t5, "T6": t6, "T7": t7,
    "T8": t8, "T9": t9, "T10": t10, "T11": t11, "T12": t12, "T13": t13,
    "T14": t14, "T15": t15, "T16": t16, "T17": t17, "T18": t18, "T19": t19,
    "T20": t20,
}


def parse_check_ids(spec: str) -> tuple[str, ...]:
    """``all``, ``T1,T5``, ``T9-T18`` or a mix."""
    spec = spec.strip()
    if spec.lower() == "all":
        return CHECK_IDS
    out: list[str] = []
    for part in spec.split(","):
        part = part.strip().upper()
        if not part:
            continue
        if "-" in part:
            lo, hi = part.split("-", 1)
            lo_i, hi_i = int(lo.lstrip("T")), int(hi.lstrip("T"))
            ids = [f"T{i}" for i in range(lo_i, hi_i + 1)]
        else:
            ids = [part if part.startswith("T") else f"T{part}"]
        for cid in ids:
            if cid not in CATALOG:
                raise ValueError(f"unknown check {cid!r}")
            if cid not in out:
                out.append(cid)
    return tuple(sorted(out, key=lambda c: int(c[1:])))


def check_theorem(check_id: str, g: Graph, bounds: OracleBounds = oracle.DEFAULT_BOUNDS, ctx: Optional[Context] = None) -> CheckResult:
    if check_id not in CATALOG:
        raise ValueError(f"unknown check {check_id!r}")
    ctx = ctx or Context(g, bounds)
    try:
        return CATALOG[check_id](ctx)
    except TooLargeError as exc:
        return _na(check_id, f"out of bound: {exc}")

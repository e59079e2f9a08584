"""Per-graph analysis report and its JSON form."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from .. import critical, independence, oracle
from ..errors import TooLargeError
from ..graph import Graph, component_masks, difference, neighborhood
from ..matching import maximum_matching
from ..oracle import OracleBounds
from ..structure import ClassTag, classify, decompose

REPORT_VERSION = 1

FAST = "fast"
ORACLE = "oracle"


@dataclass
class AnalysisReport:
    n: int
    m: int
    graph_class: str
    components: int
    alpha: Optional[int] = None
    mu: Optional[int] = None
    alpha_plus_mu: Optional[int] = None
    ke: Optional[bool] = None
    core: Optional[list[int]] = None
    corona: Optional[list[int]] = None
    ker: Optional[list[int]] = None
    n_of_core: Optional[list[int]] = None
    d: Optional[int] = None
    id: Optional[int] = None
    core_deficiency: Optional[int] = None
    critical_set: Optional[list[int]] = None
    critical_independent_set: Optional[list[int]] = None
    odd_cycle: Optional[list[int]] = None
    decomposition: Optional[dict[str, Any]] = None
    provenance: dict[str, str] = field(default_factory=dict)
    consistency: dict[str, Optional[bool]] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"oddcore_report": REPORT_VERSION}
        for key, value in self.__dict__.items():
            out["class" if key == "graph_class" else key] = value
        return out

    @property
    def all_consistent(self) -> bool:
        return all(v is not False for v in self.consistency.values())


def _sorted(s) -> list[int]:
    return sorted(s)


def analyze(g: Graph, bounds: OracleBounds = oracle.DEFAULT_BOUNDS) -> AnalysisReport:
    """Every invariant computable under ``bounds``; the rest is left as ``None``."""
    gc = classify(g)
    rep = AnalysisReport(n=g.n, m=g.m, graph_class=gc.tag.value, components=len(component_masks(g)))
    structural = gc.tag is not ClassTag.OTHER
    route = FAST if structural else ORACLE
    # Other-class graphs go through exact search, bounded like the oracles
    exact_bound = independence.EXACT_BOUND if structural else bounds.subset_bound

    if gc.cycle:
        rep.odd_cycle = list(gc.cycle)
    if gc.is_almost_bipartite:
        dec = decompose(g)
        rep.decomposition = {
            "cycle": list(dec.cycle),
            "n1": _sorted(dec.n1),
            "attach": [{"x": a.x, "y": a.y, "piece": _sorted(a.piece)} for a in dec.attach],
            "rest": [_sorted(c) for c in dec.rest],
        }
    elif gc.tag is ClassTag.OTHER:
        rep.decomposition = {
            "second_cycle": list(gc.second_cycle),
            "failure_edge": list(gc.failure_edge) if gc.failure_edge else None,
        }

    try:
        rep.mu = maximum_matching(g).size
        rep.provenance["mu"] = FAST if structural else ORACLE
    except TooLargeError as exc:
        rep.notes.append(f"mu: {exc}")

    try:
        rep.alpha = independence.independence_number(g, exact_bound)
        rep.provenance["alpha"] = route
        rep.ke = independence.is_konig_egervary(g, exact_bound) if rep.mu is not None else None
        if rep.ke is not None:
            rep.provenance["ke"] = route
        core = independence.core(g, exact_bound)
        rep.core = _sorted(core)
        rep.n_of_core = _sorted(neighborhood(g, core))
        rep.core_deficiency = len(core) - len(rep.n_of_core)
        rep.provenance["core"] = route
        rep.corona = _sorted(independence.corona(g, exact_bound))
        rep.provenance["corona"] = route
    except TooLargeError as exc:
        rep.notes.append(f"independence: {exc}")
    if rep.alpha is not None and rep.mu is not None:
        rep.alpha_plus_mu = rep.alpha + rep.mu

    rep.d = critical.critical_difference(g)
    rep.provenance["d"] = FAST
    rep.critical_set = _sorted(critical.find_critical_set(g))
    try:
        rep.critical_independent_set = _sorted(critical.find_critical_independent_set(g, bounds.omega_bound))
    except TooLargeError as exc:
        rep.notes.append(f"critical_independent_set: {exc}")
    if g.n <= bounds.subset_bound:
        rep.id = critical.independence_difference(g, bounds.subset_bound)
        rep.provenance["id"] = ORACLE
    if g.n <= bounds.omega_bound:
        rep.ker = _sorted(critical.ker(g, bounds.omega_bound))
        rep.provenance["ker"] = ORACLE

    _consistency(rep, gc.tag)
    if rep.critical_independent_set is not None:
        cis = rep.critical_independent_set
        rep.consistency["critical_independent_set_attains_d"] = g.is_independent(cis) and difference(g, cis) == rep.d
    return rep


def _consistency(rep: AnalysisReport, tag: ClassTag) -> None:
    c = rep.consistency
    have_am = rep.alpha is not None and rep.mu is not None

    c["ke_definition"] = (rep.ke == (rep.alpha_plus_mu == rep.n)) if have_am and rep.ke is not None else None
    c["d_equals_id"] = (rep.d == rep.id) if rep.id is not None else None
    c["ker_in_core"] = set(rep.ker) <= set(rep.core) if rep.ker is not None and rep.core is not None else None
    c["core_deficiency_at_most_d"] = (
        rep.core_deficiency <= rep.d if rep.core_deficiency is not None else None
    )
    c["alpha_minus_mu_at_most_d"] = (max(0, rep.alpha - rep.mu) <= rep.d) if have_am else None
    if tag is ClassTag.ALMOST_BIPARTITE and have_am:
        c["alpha_plus_mu_in_n_minus_1_n"] = rep.alpha_plus_mu in (rep.n - 1, rep.n)
        c["difference_identity"] = rep.d == rep.alpha - rep.mu == rep.core_deficiency
    elif rep.ke and have_am:
        c["difference_identity"] = rep.d == rep.alpha - rep.mu == rep.core_deficiency


def oracle_summary(g: Graph, bounds: OracleBounds = oracle.DEFAULT_BOUNDS) -> dict[str, Any]:
    """Pure brute-force values, each ``None`` when out of bound."""

    def attempt(fn):
        try:
            return fn()
        except TooLargeError:
            return None

    alpha = attempt(lambda: oracle.oracle_alpha(g, bounds))
    mu = attempt(lambda: oracle.oracle_mu(g, bounds))
    ccs = attempt(lambda: oracle.oracle_core_corona_ker(g, bounds))
    out: dict[str, Any] = {
        "oddcore_oracle": REPORT_VERSION,
        "n": g.n,
        "m": g.m,
        "alpha": alpha,
        "mu": mu,
        "ke": (alpha + mu == g.n) if alpha is not None and mu is not None else None,
        "d": attempt(lambda: oracle.oracle_d_all_subsets(g, bounds)),
        "id": attempt(lambda: oracle.oracle_id(g, bounds)),
        "core": _sorted(ccs[0]) if ccs else None,
        "corona": _sorted(ccs[1]) if ccs else None,
        "ker": _sorted(ccs[2]) if ccs else None,
    }
    return out

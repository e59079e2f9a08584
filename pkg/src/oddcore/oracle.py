"""Brute-force ground truth.

Everything here is deliberately naive and shares no code with the fast
paths beyond the :class:`~oddcore.graph.Graph` value type. Each function
refuses inputs above its bound instead of running for hours.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import reduce

from .errors import TooLargeError
from .graph import Edge, Graph, VertexSet, from_mask, to_mask
from .matching import Matching

ENV_BOUND = "ODDCORE_ORACLE_BOUND"


@dataclass(frozen=True)
class OracleBounds:
    subset_bound: int = 16
    omega_bound: int = 18
    matching_bound: int = 18

    def __post_init__(self):
        for name in ("subset_bound", "omega_bound", "matching_bound"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    @classmethod
    def uniform(cls, bound: int) -> OracleBounds:
        return cls(bound, bound, bound)

    @classmethod
    def from_env(cls) -> OracleBounds:
        raw = os.environ.get(ENV_BOUND)
        if raw is None or not raw.strip():
            return cls()
        return cls.uniform(int(raw))


DEFAULT_BOUNDS = OracleBounds()


def _require(g: Graph, bound: int, what: str) -> None:
    if g.n > bound:
        raise TooLargeError(f"{what}: n={g.n} exceeds oracle bound {bound}")


def independent_set_masks(g: Graph) -> list[int]:
    """Every independent set (including the empty set) as a bitmask, ascending."""
    adj = g.masks
    out = []
    for mask in range(1 << g.n):
        ok = True
        rest = mask
        while rest:
            low = rest & -rest
            if adj[low.bit_length() - 1] & mask:
                ok = False
                break
            rest ^= low
        if ok:
            out.append(mask)
    return out


def _omega_masks(g: Graph) -> tuple[int, list[int]]:
    best, sets = 0, [0]
    for mask in independent_set_masks(g):
        c = mask.bit_count()
        if c > best:
            best, sets = c, [mask]
        elif c == best and mask:
            sets.append(mask)
    return best, sets


def oracle_alpha(g: Graph, bounds: OracleBounds = DEFAULT_BOUNDS) -> int:
    _require(g, bounds.subset_bound, "oracle_alpha")
    return max(m.bit_count() for m in independent_set_masks(g))


def oracle_omega(g: Graph, bounds: OracleBounds = DEFAULT_BOUNDS) -> list[VertexSet]:
    """All maximum independent sets, in ascending bitmask order."""
    _require(g, bounds.omega_bound, "oracle_omega")
    return [from_mask(m) for m in _omega_masks(g)[1]]


def _all_matchings(g: Graph) -> list[list[Edge]]:
    # include/exclude each edge in turn
    edges = g.edges
    out: list[list[Edge]] = []

    def rec(i: int, used: int, chosen: list[Edge]) -> None:
        if i == len(edges):
            out.append(list(chosen))
            return
        rec(i + 1, used, chosen)
        u, v = edges[i]
        if not (used >> u & 1 or used >> v & 1):
            chosen.append(edges[i])
            rec(i + 1, used | 1 << u | 1 << v, chosen)
            chosen.pop()

    rec(0, 0, [])
    return out


def oracle_mu(g: Graph, bounds: OracleBounds = DEFAULT_BOUNDS) -> int:
    _require(g, bounds.matching_bound, "oracle_mu")
    edges = g.edges
    best = 0

    def rec(i: int, used: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if i == len(edges) or size + (len(edges) - i) <= best or size + (g.n - used.bit_count()) // 2 <= best:
            return
        u, v = edges[i]
        if not (used >> u & 1 or used >> v & 1):
            rec(i + 1, used | 1 << u | 1 << v, size + 1)
        rec(i + 1, used, size)

    rec(0, 0, 0)
    return best


def oracle_maximum_matchings(g: Graph, bounds: OracleBounds = DEFAULT_BOUNDS) -> list[Matching]:
    _require(g, bounds.matching_bound, "oracle_maximum_matchings")
    all_m = _all_matchings(g)
    top = max(len(m) for m in all_m)
    return [Matching(frozenset(m)) for m in all_m if len(m) == top]


def _neighborhood_table(g: Graph) -> list[int]:
    # nbr[mask] = N(mask), built incrementally in ascending mask order
    adj = g.masks
    nbr = [0] * (1 << g.n)
    for mask in range(1, 1 << g.n):
        low = mask & -mask
        nbr[mask] = nbr[mask ^ low] | adj[low.bit_length() - 1]
    return nbr


def oracle_d_all_subsets(g: Graph, bounds: OracleBounds = DEFAULT_BOUNDS) -> int:
    """max over all X of |X| - |N(X)|."""
    _require(g, bounds.subset_bound, "oracle_d_all_subsets")
    nbr = _neighborhood_table(g)
    return max(mask.bit_count() - nbr[mask].bit_count() for mask in range(1 << g.n))


def oracle_id(g: Graph, bounds: OracleBounds = DEFAULT_BOUNDS) -> int:
    """max over independent I of |I| - |N(I)|."""
    _require(g, bounds.subset_bound, "oracle_id")
    adj = g.masks

    def nb(mask: int) -> int:
        return reduce(lambda acc, v: acc | adj[v], from_mask(mask), 0)

    return max(m.bit_count() - nb(m).bit_count() for m in independent_set_masks(g))


def oracle_critical_independent_sets(g: Graph, bounds: OracleBounds = DEFAULT_BOUNDS) -> list[VertexSet]:
    _require(g, bounds.subset_bound, "oracle_critical_independent_sets")
    adj = g.masks
    scored = []
    for m in independent_set_masks(g):
        nb = 0
        for v in from_mask(m):
            nb |= adj[v]
        scored.append((m.bit_count() - nb.bit_count(), m))
    top = max(s for s, _ in scored)
    return [from_mask(m) for s, m in scored if s == top]


def oracle_core_corona_ker(
    g: Graph, bounds: OracleBounds = DEFAULT_BOUNDS
) -> tuple[VertexSet, VertexSet, VertexSet]:
    _require(g, bounds.omega_bound, "oracle_core_corona_ker")
    _, omega = _omega_masks(g)
    core = reduce(lambda a, b: a & b, omega, g.full_mask)
    corona = reduce(lambda a, b: a | b, omega, 0)
    crit = oracle_critical_independent_sets(g, OracleBounds.uniform(max(g.n, 1)))
    ker = reduce(lambda a, b: a & b, (to_mask(s) for s in crit), g.full_mask)
    return from_mask(core), from_mask(corona), from_mask(ker)


def oracle_has_matching_into(g: Graph, a: VertexSet, b: VertexSet) -> bool:
    """Hall's condition on the (a, b) edge set, by enumerating subsets of ``a``."""
    av = sorted(a)
    bmask = to_mask(b)
    if len(av) > 20:
        raise TooLargeError(f"Hall enumeration over |A|={len(av)} subsets")
    adj = g.masks
    for sub in range(1, 1 << len(av)):
        nb = 0
        for i, v in enumerate(av):
            if sub >> i & 1:
                nb |= adj[v]
        if (nb & bmask).bit_count() < sub.bit_count():
            return False
    return True

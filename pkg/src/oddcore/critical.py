"""Critical difference, critical (independent) sets and ker.

``d(G) = max |X| - |N(X)|`` is the left-side deficiency of the bipartite
double cover, whose left copy of ``X`` sees exactly the right copy of
``N(X)``. One bipartite matching therefore gives ``d(G)`` for any graph,
and the alternating forest from the exposed left copies gives a witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import TooLargeError
from .graph import Graph, VertexSet, difference, from_mask, iter_bits, to_mask
from .matching import maximum_matching_bipartite
from .structure import classify

ENUMERATION_BOUND = 18


@dataclass(frozen=True)
class CriticalProfile:
    d: int
    id: Optional[int]
    critical_set: VertexSet
    critical_independent_set: Optional[VertexSet] = None
    ker: Optional[VertexSet] = None


def bipartite_double_cover(g: Graph) -> Graph:
    """Vertices ``v`` and ``v' = v + n``; each edge ``uv`` becomes ``u-v'`` and ``v-u'``."""
    n = g.n
    edges = []
    for u, v in g.edges:
        edges.append((u, v + n))
        edges.append((v, u + n))
    return Graph(2 * n, edges)


def _cover_matching(g: Graph) -> dict[int, int]:
    def compute():
        cover = bipartite_double_cover(g)
        mate: dict[int, int] = {}
        for a, b in maximum_matching_bipartite(cover).edges:
            mate[a] = b
            mate[b] = a
        return mate

    return g.cached("cover_matching", compute)


def critical_difference(g: Graph) -> int:
    mate = _cover_matching(g)
    return g.n - sum(1 for v in range(g.n) if v in mate)


def find_critical_set(g: Graph) -> VertexSet:
    """A set ``X`` with ``d(X) = d(G)``; empty when ``d(G) = 0``.

    ``X`` is the set of left copies reachable from exposed left copies by
    alternating paths. Its right-side neighbours are all matched back into
    ``X``, so ``|X| - |N(X)|`` is exactly the number of exposed left copies.
    """
    n = g.n
    mate = _cover_matching(g)
    exposed = [v for v in range(n) if v not in mate]
    if not exposed:
        return frozenset()
    reach = set(exposed)
    stack = list(exposed)
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            back = mate.get(w + n)
            if back is not None and back not in reach:
                reach.add(back)
                stack.append(back)
    return frozenset(reach)


def _independent_set_masks(g: Graph):
    masks = g.masks

    def rec(chosen: int, cand: int):
        if not cand:
            yield chosen
            return
        low = cand & -cand
        v = low.bit_length() - 1
        yield from rec(chosen | low, cand & ~masks[v] & ~low)
        yield from rec(chosen, cand & ~low)

    return rec(0, g.full_mask)


def _neighborhood(g: Graph, mask: int) -> int:
    out = 0
    for v in iter_bits(mask):
        out |= g.masks[v]
    return out


def critical_independent_sets(g: Graph, bound: int = ENUMERATION_BOUND) -> list[VertexSet]:
    """Every independent set attaining ``d(G)``."""
    if g.n > bound:
        raise TooLargeError(f"enumerating independent sets with n={g.n} (bound {bound})")
    d = critical_difference(g)
    hits = [
        m for m in _independent_set_masks(g) if m.bit_count() - _neighborhood(g, m).bit_count() == d
    ]
    return sorted((from_mask(m) for m in hits), key=lambda s: (len(s), sorted(s)))


def independence_difference(g: Graph, bound: int = ENUMERATION_BOUND) -> int:
    """``id(G)``, maximised over independent sets by enumeration."""
    if g.n > bound:
        raise TooLargeError(f"enumerating independent sets with n={g.n} (bound {bound})")
    return max(m.bit_count() - _neighborhood(g, m).bit_count() for m in _independent_set_masks(g))


def find_critical_independent_set(g: Graph, bound: int = ENUMERATION_BOUND) -> VertexSet:
    """An independent set ``I`` with ``d(I) = d(G)``.

    Tries, in order: ``core(G)`` for bipartite and almost-bipartite graphs;
    ``X - N(X)`` for the critical set ``X`` from :func:`find_critical_set`;
    enumeration up to ``bound`` vertices. Every candidate is re-checked by a
    direct difference computation before it is returned.
    """
    d = critical_difference(g)
    if d == 0:
        return frozenset()
    candidates = []
    if classify(g).tag.value != "other":
        from .independence import core

        candidates.append(lambda: core(g))
    candidates.append(lambda: _reduced_critical_set(g))
    for make in candidates:
        cand = make()
        if g.is_independent(cand) and difference(g, cand) == d:
            return cand
    if g.n > bound:
        raise TooLargeError(f"no structural critical independent set found and n={g.n} exceeds {bound}")
    return critical_independent_sets(g, bound)[0]


def _reduced_critical_set(g: Graph) -> VertexSet:
    x = to_mask(find_critical_set(g))
    return from_mask(x & ~_neighborhood(g, x))


def ker(g: Graph, bound: int = ENUMERATION_BOUND) -> VertexSet:
    """Intersection of all critical independent sets."""
    out = g.full_mask
    for s in critical_independent_sets(g, bound):
        out &= to_mask(s)
    return from_mask(out)


def critical_profile(g: Graph, bound: int = ENUMERATION_BOUND) -> CriticalProfile:
    small = g.n <= bound
    return CriticalProfile(
        d=critical_difference(g),
        id=independence_difference(g, bound) if small else None,
        critical_set=find_critical_set(g),
        critical_independent_set=find_critical_independent_set(g, bound) if small else None,
        ker=ker(g, bound) if small else None,
    )

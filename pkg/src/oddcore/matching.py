"""Maximum matchings.

Three engines, chosen by graph class:

* bipartite: augmenting paths from the left side in ascending vertex order;
* almost bipartite: the best of ``G - e`` over the edges ``e`` of the odd
  cycle, each of which is bipartite (some cycle edge is always avoidable);
* anything else: exact memoised search over vertex subsets, per component,
  limited to components of at most ``GENERAL_BOUND`` vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import GraphError, NotBipartiteError, TooLargeError
from .graph import (
    Edge,
    Graph,
    VertexSet,
    bfs_two_coloring,
    component_masks,
    iter_bits,
    norm_edge,
    to_mask,
)

GENERAL_BOUND = 24


@dataclass(frozen=True)
class Matching:
    edges: frozenset[Edge]

    def __post_init__(self):
        seen = 0
        for u, v in self.edges:
            if u >= v:
                raise GraphError(f"matching edge {(u, v)} is not normalised")
            if seen >> u & 1 or seen >> v & 1:
                raise GraphError("matching edges are not pairwise disjoint")
            seen |= 1 << u | 1 << v

    @classmethod
    def of(cls, edges: Iterable[tuple[int, int]]) -> Matching:
        return cls(frozenset(norm_edge(u, v) for u, v in edges))

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def saturated(self) -> VertexSet:
        return frozenset(v for e in self.edges for v in e)

    def saturates(self, v: int) -> bool:
        return any(v in e for e in self.edges)

    def mate(self, v: int) -> Optional[int]:
        for a, b in self.edges:
            if a == v:
                return b
            if b == v:
                return a
        return None

    def is_valid_for(self, g: Graph) -> bool:
        return all(g.has_edge(u, v) for u, v in self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


def _kuhn(g: Graph, left: list[int], allowed: int, skip: Optional[Edge] = None) -> dict[int, int]:
    """Augmenting-path matching from ``left`` into neighbours inside ``allowed``.

    Returns ``mate`` for every matched vertex (both sides). Deterministic:
    left vertices in the given order, neighbours ascending.
    """
    mate: dict[int, int] = {}
    adj = [
        tuple(w for w in g.neighbors(u) if allowed >> w & 1 and (skip is None or norm_edge(u, w) != skip))
        for u in range(g.n)
    ]

    for root in left:
        # iterative DFS for an augmenting path from root
        visited = {root}
        stack = [(root, 0)]
        path: list[tuple[int, int]] = []
        found = False
        while stack:
            u, i = stack[-1]
            nbrs = adj[u]
            if i >= len(nbrs):
                stack.pop()
                if path:
                    path.pop()
                continue
            stack[-1] = (u, i + 1)
            w = nbrs[i]
            if w in visited:
                continue
            visited.add(w)
            if w not in mate:
                path.append((u, w))
                found = True
                break
            nxt = mate[w]
            if nxt in visited:
                continue
            visited.add(nxt)
            path.append((u, w))
            stack.append((nxt, 0))
        if found:
            for u, w in path:
                mate[u] = w
                mate[w] = u
    return mate


def _as_matching(mate: dict[int, int]) -> Matching:
    return Matching(frozenset(norm_edge(u, w) for u, w in mate.items() if u < w))


def _bipartite_matching(g: Graph, skip: Optional[Edge] = None) -> Optional[Matching]:
    color, _, conflict = _coloring(g, skip)
    if conflict:
        return None
    left = [v for v in g.vertices if color[v] == 0]
    return _as_matching(_kuhn(g, left, g.full_mask, skip))


def _coloring(g: Graph, skip: Optional[Edge]) -> tuple[list[int], None, bool]:
    if skip is None:
        color, _, conflict = bfs_two_coloring(g)
        return color, None, conflict is not None
    # BFS that ignores one edge
    from collections import deque

    color = [-1] * g.n
    bad = False
    for root in g.vertices:
        if color[root] != -1:
            continue
        color[root] = 0
        q = deque([root])
        while q:
            u = q.popleft()
            for w in g.neighbors(u):
                if norm_edge(u, w) == skip:
                    continue
                if color[w] == -1:
                    color[w] = color[u] ^ 1
                    q.append(w)
                elif color[w] == color[u]:
                    bad = True
    return color, None, bad


def maximum_matching_bipartite(g: Graph) -> Matching:
    m = _bipartite_matching(g)
    if m is None:
        raise NotBipartiteError("graph has an odd cycle")
    return m


def _general_matching(g: Graph, bound: int) -> Matching:
    edges: set[Edge] = set()
    for comp in component_masks(g):
        size = comp.bit_count()
        if size == 1:
            continue
        if size > bound:
            raise TooLargeError(f"exact general matching on a component of {size} vertices (bound {bound})")
        edges |= _memo_matching(g, comp)
    return Matching(frozenset(edges))


def _memo_matching(g: Graph, comp: int) -> set[Edge]:
    adj = g.masks
    memo: dict[int, int] = {}

    def best(mask: int) -> int:
        # maximum matching size of G[mask]; lowest vertex either unmatched or matched to a neighbour
        while mask and not adj[(mask & -mask).bit_length() - 1] & mask:
            mask &= mask - 1
        if not mask:
            return 0
        got = memo.get(mask)
        if got is not None:
            return got
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        cap = rest.bit_count() + 1 >> 1
        result = best(rest)
        if result < cap:
            for u in iter_bits(adj[v] & rest):
                cand = 1 + best(rest & ~(1 << u))
                if cand > result:
                    result = cand
                    if result == cap:
                        break
        memo[mask] = result
        return result

    # reconstruct
    chosen: set[Edge] = set()
    mask = comp
    target = best(mask)
    while target:
        while not adj[(mask & -mask).bit_length() - 1] & mask:
            mask &= mask - 1
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        if best(rest) == target:
            mask = rest
            continue
        for u in iter_bits(adj[v] & rest):
            if 1 + best(rest & ~(1 << u)) == target:
                chosen.add(norm_edge(v, u))
                mask = rest & ~(1 << u)
                target -= 1
                break
    return chosen


def maximum_matching(g: Graph, general_bound: int = GENERAL_BOUND) -> Matching:
    """A maximum matching of ``g``, dispatched on its class."""
    from .structure import classify, cycle_edges

    def compute() -> Matching:
        gc = classify(g)
        if gc.is_bipartite:
            return maximum_matching_bipartite(g)
        if gc.is_almost_bipartite:
            best: Optional[Matching] = None
            for e in cycle_edges(gc.cycle):
                m = _bipartite_matching(g, skip=e)
                assert m is not None
                if best is None or m.size > best.size:
                    best = m
            assert best is not None
            return best
        return _general_matching(g, general_bound)

    if general_bound != GENERAL_BOUND:
        return compute()
    return g.cached("max_matching", compute)


def matching_number(g: Graph) -> int:
    return maximum_matching(g).size


def matching_from_into(g: Graph, a: Iterable[int], b: Iterable[int]) -> Optional[Matching]:
    """A matching saturating all of ``a`` using only edges between ``a`` and ``b``.

    ``None`` when no such matching exists; :func:`hall_violator` then
    returns a subset of ``a`` with fewer than ``|a|`` neighbours in ``b``.
    """
    amask, bmask = to_mask(a), to_mask(b)
    if amask & bmask:
        raise GraphError("matching_from_into needs disjoint vertex sets")
    mate = _kuhn(g, sorted(iter_bits(amask)), bmask)
    if sum(1 for v in iter_bits(amask) if v in mate) < amask.bit_count():
        return None
    return Matching(frozenset(norm_edge(v, mate[v]) for v in iter_bits(amask)))


def hall_violator(g: Graph, a: Iterable[int], b: Iterable[int]) -> Optional[VertexSet]:
    """A set ``S`` inside ``a`` with ``|N(S) & b| < |S|``, or ``None``."""
    amask, bmask = to_mask(a), to_mask(b)
    if amask & bmask:
        raise GraphError("hall_violator needs disjoint vertex sets")
    mate = _kuhn(g, sorted(iter_bits(amask)), bmask)
    free = [v for v in iter_bits(amask) if v not in mate]
    if not free:
        return None
    # König: A-vertices reachable from a free A-vertex by alternating paths
    reach_a = set(free)
    stack = list(free)
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if bmask >> w & 1:
                nxt = mate.get(w)
                if nxt is not None and nxt not in reach_a:
                    reach_a.add(nxt)
                    stack.append(nxt)
    return frozenset(reach_a)


def is_mu_critical_edge(g: Graph, u: int, v: int) -> bool:
    from .graph import remove_edge

    return matching_number(remove_edge(g, u, v)) < matching_number(g)

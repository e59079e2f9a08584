"""Independence number, core, corona and König-Egerváry testing.

Dispatch is by graph class:

* bipartite: ``alpha = n - mu``; ``v`` is in the core iff some maximum
  matching leaves ``v`` exposed;
* almost bipartite: ``alpha = n - mu`` when some attachment vertex ``x``
  lies in the core of its piece, otherwise ``n - 1 - mu``; the core of a
  non-KE graph is the union of the piece cores;
* other: exact branch-and-bound, per component, up to ``exact_bound``
  vertices.

Vertex-deletion queries (core, corona) reuse one maximum matching per
bipartite graph and repair it by single augmenting searches.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import TooLargeError
from .graph import (
    Edge,
    Graph,
    VertexSet,
    component_masks,
    from_mask,
    induced,
    iter_bits,
    remove_edge,
    to_mask,
)
from .matching import maximum_matching
from .structure import ClassTag, classify, decompose

EXACT_BOUND = 16
ENUMERATION_BOUND = 18


# ---------------------------------------------------------------------------
# bipartite matching engine on a vertex mask, with cheap vertex deletion


class _BipartiteMatcher:
    """Maximum matching of ``G[alive]`` for a bipartite induced subgraph."""

    def __init__(self, masks: tuple[int, ...], alive: int):
        self.masks = masks
        self.alive = alive
        self.mate: dict[int, int] = {}
        for v in iter_bits(alive):
            if v not in self.mate:
                self._augment(v, alive, self.mate)
        self.size = len(self.mate) // 2
        self._missable: int | None = None

    def _augment(self, root: int, alive: int, mate: dict[int, int]) -> bool:
        masks = self.masks
        visited = 1 << root
        # stack of (vertex, remaining candidate mask); path holds (left, right) pairs
        stack = [(root, masks[root] & alive)]
        path: list[tuple[int, int]] = []
        while stack:
            u, cand = stack[-1]
            cand &= ~visited
            if not cand:
                stack.pop()
                if path:
                    path.pop()
                continue
            low = cand & -cand
            stack[-1] = (u, cand ^ low)
            w = low.bit_length() - 1
            visited |= low
            nxt = mate.get(w)
            if nxt is None:
                path.append((u, w))
                for a, b in path:
                    mate[a] = b
                    mate[b] = a
                return True
            if visited >> nxt & 1:
                continue
            visited |= 1 << nxt
            path.append((u, w))
            stack.append((nxt, masks[nxt] & alive))
        return False

    @property
    def missable(self) -> int:
        """Vertices missed by some maximum matching.

        Those are the exposed vertices plus everything reachable from them
        along an even alternating path.
        """
        if self._missable is None:
            masks, alive, mate = self.masks, self.alive, self.mate
            even = 0
            stack = []
            for v in iter_bits(alive):
                if v not in mate:
                    even |= 1 << v
                    stack.append(v)
            while stack:
                u = stack.pop()
                for w in iter_bits(masks[u] & alive):
                    x = mate.get(w)
                    if x is not None and not even >> x & 1:
                        even |= 1 << x
                        stack.append(x)
            self._missable = even
        return self._missable

    def mu_without(self, removed: int) -> int:
        """Matching number of ``G[alive - removed]``."""
        removed &= self.alive
        if not removed:
            return self.size
        if not removed & (removed - 1):
            # a single vertex costs a matching edge iff every maximum matching covers it
            return self.size - (0 if self.missable & removed else 1)
        # one vertex at a time: after deleting a matched x, any augmenting
        # path must end at x's former mate, so one search restores maximality
        alive = self.alive
        mate = dict(self.mate)
        for x in iter_bits(removed):
            alive &= ~(1 << x)
            w = mate.pop(x, None)
            if w is not None:
                del mate[w]
                self._augment(w, alive, mate)
        return len(mate) // 2


def _bipartite_core_mask(masks: tuple[int, ...], alive: int) -> int:
    """Vertices of a bipartite ``G[alive]`` missed by some maximum matching."""
    return _BipartiteMatcher(masks, alive).missable


def bipartite_core(g: Graph) -> VertexSet:
    return from_mask(_bipartite_core_mask(g.masks, g.full_mask))


# ---------------------------------------------------------------------------
# exact alpha for small graphs of any class


def _exact_alpha(masks: tuple[int, ...], cand: int, memo: dict[int, int]) -> int:
    if not cand:
        return 0
    got = memo.get(cand)
    if got is not None:
        return got
    # a vertex of degree <= 1 inside cand is always safe to take
    best_v, best_deg = -1, -1
    for v in iter_bits(cand):
        d = (masks[v] & cand).bit_count()
        if d <= 1:
            r = 1 + _exact_alpha(masks, cand & ~(masks[v] | 1 << v), memo)
            memo[cand] = r
            return r
        if d > best_deg:
            best_v, best_deg = v, d
    v = best_v
    r = max(
        _exact_alpha(masks, cand & ~(1 << v), memo),
        1 + _exact_alpha(masks, cand & ~(masks[v] | 1 << v), memo),
    )
    memo[cand] = r
    return r


# ---------------------------------------------------------------------------
# alpha(G - R) oracle-free engine, per graph


class AlphaEngine:
    """Answers ``alpha(G - R)`` for vertex sets ``R``.

    Bipartite ``G``: ``|V - R| - mu(G - R)``. Almost bipartite ``G`` with a
    cycle vertex ``y``: ``max(alpha(G - y - R), 1 + alpha(G - N[y] - R))``,
    and both graphs are bipartite. Other classes fall back to the exact
    branch-and-bound, limited to ``exact_bound`` vertices.
    """

    def __init__(self, g: Graph, exact_bound: int = EXACT_BOUND):
        self.g = g
        self.tag = classify(g).tag
        full = g.full_mask
        if self.tag is ClassTag.BIPARTITE:
            self._plain = _BipartiteMatcher(g.masks, full)
        elif self.tag is ClassTag.ALMOST_BIPARTITE:
            y = classify(g).cycle[0]
            self.y = y
            self.ny = g.masks[y] | 1 << y
            self._without_y = _BipartiteMatcher(g.masks, full & ~(1 << y))
            self._without_ny = _BipartiteMatcher(g.masks, full & ~self.ny)
        else:
            biggest = max((c.bit_count() for c in component_masks(g)), default=0)
            if biggest > exact_bound:
                raise TooLargeError(
                    f"exact independence number on a component of {biggest} vertices (bound {exact_bound})"
                )
            self._memo: dict[int, int] = {}

    def alpha_without(self, removed: int = 0) -> int:
        g = self.g
        full = g.full_mask
        removed &= full
        if self.tag is ClassTag.BIPARTITE:
            return (full & ~removed).bit_count() - self._plain.mu_without(removed)
        if self.tag is ClassTag.ALMOST_BIPARTITE:
            y, ny = self.y, self.ny
            left = full & ~removed & ~(1 << y)
            a1 = left.bit_count() - self._without_y.mu_without(removed)
            if removed >> y & 1:
                return a1
            right = full & ~removed & ~ny
            a2 = 1 + right.bit_count() - self._without_ny.mu_without(removed & ~ny)
            return max(a1, a2)
        return _exact_alpha(g.masks, full & ~removed, self._memo)


def alpha_engine(g: Graph, exact_bound: int = EXACT_BOUND) -> AlphaEngine:
    if exact_bound != EXACT_BOUND:
        return AlphaEngine(g, exact_bound)
    return g.cached("alpha_engine", lambda: AlphaEngine(g))


# ---------------------------------------------------------------------------
# public operations


def _piece_cores(g: Graph) -> dict[VertexSet, VertexSet]:
    def compute():
        dec = decompose(g)
        return {p: from_mask(_bipartite_core_mask(g.masks, to_mask(p))) for p in dec.pieces}

    return g.cached("piece_cores", compute)


def ke_by_attachments(g: Graph) -> bool:
    """Almost-bipartite KE test: some ``x`` in N1(C) lies in ``core(B_x)``."""
    cores = _piece_cores(g)
    return any(a.x in cores[a.piece] for a in decompose(g).attach)


def independence_number(g: Graph, exact_bound: int = EXACT_BOUND) -> int:
    def compute() -> int:
        tag = classify(g).tag
        if tag is ClassTag.BIPARTITE:
            return g.n - maximum_matching(g).size
        if tag is ClassTag.ALMOST_BIPARTITE:
            mu = maximum_matching(g).size
            return g.n - mu if ke_by_attachments(g) else g.n - 1 - mu
        total = 0
        for comp in component_masks(g):
            h, _ = induced(g, iter_bits(comp))
            if classify(h).tag is ClassTag.OTHER:
                if h.n > exact_bound:
                    raise TooLargeError(
                        f"exact independence number on a component of {h.n} vertices (bound {exact_bound})"
                    )
                total += _exact_alpha(h.masks, h.full_mask, {})
            else:
                total += independence_number(h)
        return total

    if exact_bound != EXACT_BOUND:
        return compute()
    return g.cached("alpha", compute)


def is_konig_egervary(g: Graph, exact_bound: int = EXACT_BOUND) -> bool:
    tag = classify(g).tag
    if tag is ClassTag.BIPARTITE:
        return True
    if tag is ClassTag.ALMOST_BIPARTITE:
        return ke_by_attachments(g)
    return independence_number(g, exact_bound) + maximum_matching(g).size == g.n


def core(g: Graph, exact_bound: int = EXACT_BOUND) -> VertexSet:
    """Intersection of all maximum independent sets."""

    def compute() -> VertexSet:
        tag = classify(g).tag
        if tag is ClassTag.BIPARTITE:
            return bipartite_core(g)
        if tag is ClassTag.ALMOST_BIPARTITE and not ke_by_attachments(g):
            dec = decompose(g)
            out: set[int] = set()
            for piece_core in _piece_cores(g).values():
                out |= piece_core
            for comp in dec.rest:
                out |= from_mask(_bipartite_core_mask(g.masks, to_mask(comp)))
            return frozenset(out)
        return core_by_deletion(g, exact_bound)

    if exact_bound != EXACT_BOUND:
        return compute()
    return g.cached("core", compute)


def core_by_deletion(g: Graph, exact_bound: int = EXACT_BOUND) -> VertexSet:
    """``{v : alpha(G - v) = alpha(G) - 1}`` for every class, never the piece-union rule."""
    eng = alpha_engine(g, exact_bound)
    a = eng.alpha_without(0)
    return frozenset(v for v in g.vertices if eng.alpha_without(1 << v) == a - 1)


def corona(g: Graph, exact_bound: int = EXACT_BOUND) -> VertexSet:
    """Union of all maximum independent sets: ``alpha(G - N[v]) = alpha(G) - 1``."""

    def compute() -> VertexSet:
        eng = alpha_engine(g, exact_bound)
        a = eng.alpha_without(0)
        return frozenset(v for v in g.vertices if eng.alpha_without(g.masks[v] | 1 << v) == a - 1)

    if exact_bound != EXACT_BOUND:
        return compute()
    return g.cached("corona", compute)


def enumerate_maximum_independent_sets(g: Graph, bound: int = ENUMERATION_BOUND) -> list[VertexSet]:
    """All of Omega(G), sorted by their sorted vertex tuples."""
    if g.n > bound:
        raise TooLargeError(f"enumerating maximum independent sets with n={g.n} (bound {bound})")
    masks = g.masks
    alpha = _exact_alpha(masks, g.full_mask, {})
    out: list[int] = []

    def rec(chosen: int, size: int, cand: int) -> None:
        if size + cand.bit_count() < alpha:
            return
        if not cand:
            out.append(chosen)
            return
        low = cand & -cand
        v = low.bit_length() - 1
        rec(chosen | low, size + 1, cand & ~masks[v] & ~low)
        rec(chosen, size, cand & ~low)

    rec(0, 0, g.full_mask)
    return sorted((from_mask(m) for m in out), key=lambda s: sorted(s))


def is_alpha_critical_edge(g: Graph, e: Edge, exact_bound: int = EXACT_BOUND) -> bool:
    u, v = e
    return independence_number(remove_edge(g, u, v), exact_bound) > independence_number(g, exact_bound)


def alpha_critical_edges(g: Graph, exact_bound: int = EXACT_BOUND) -> list[Edge]:
    return [e for e in g.edges if is_alpha_critical_edge(g, e, exact_bound)]


@dataclass(frozen=True)
class IndependenceProfile:
    """alpha, KE flag, core and corona of one graph (Omega count when small)."""

    alpha: int
    ke: bool
    core: VertexSet
    corona: VertexSet
    omega_count: Optional[int] = None


def independence_profile(g: Graph, exact_bound: int = EXACT_BOUND) -> IndependenceProfile:
    count = len(enumerate_maximum_independent_sets(g)) if g.n <= ENUMERATION_BOUND else None
    return IndependenceProfile(
        independence_number(g, exact_bound),
        is_konig_egervary(g, exact_bound),
        core(g, exact_bound),
        corona(g, exact_bound),
        count,
    )

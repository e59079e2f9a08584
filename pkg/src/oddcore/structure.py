"""Bipartite / almost-bipartite classification and odd-cycle decomposition.

A graph is almost bipartite when it has exactly one odd cycle ``C``. If
some other odd cycle ``D`` existed, ``D`` would miss an edge ``e`` of ``C``
and ``G - e`` would still contain ``D``. Conversely, when ``C`` is the only
odd cycle, deleting any edge of ``C`` leaves no odd cycle. So uniqueness is
decided by ``|C|`` bipartiteness tests instead of counting odd cycles.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .errors import GraphError, InternalStructureViolation
from .graph import (
    Edge,
    Graph,
    VertexSet,
    bfs_two_coloring,
    component_masks,
    from_mask,
    iter_bits,
    norm_edge,
    to_mask,
)


class ClassTag(str, enum.Enum):
    BIPARTITE = "bipartite"
    ALMOST_BIPARTITE = "almost_bipartite"
    OTHER = "other"


@dataclass(frozen=True)
class GraphClass:
    """Classification result.

    ``cycle`` is the unique odd cycle for almost-bipartite graphs. For
    ``OTHER`` graphs, ``cycle`` and ``second_cycle`` are two distinct odd
    cycles and ``failure_edge`` is the edge of ``cycle`` whose deletion
    leaves ``second_cycle`` in place.
    """

    tag: ClassTag
    cycle: tuple[int, ...] = ()
    second_cycle: tuple[int, ...] = ()
    failure_edge: Optional[Edge] = None

    @property
    def is_bipartite(self) -> bool:
        return self.tag is ClassTag.BIPARTITE

    @property
    def is_almost_bipartite(self) -> bool:
        return self.tag is ClassTag.ALMOST_BIPARTITE


@dataclass(frozen=True)
class Attachment:
    """One vertex ``x`` of N1(C) with its cycle neighbour ``y`` and piece ``B_x``."""

    x: int
    y: int
    piece: VertexSet


@dataclass(frozen=True)
class OddCycleDecomposition:
    cycle: tuple[int, ...]
    attach: tuple[Attachment, ...]
    rest: tuple[VertexSet, ...] = field(default=())

    @property
    def cycle_vertices(self) -> VertexSet:
        return frozenset(self.cycle)

    @property
    def cycle_edges(self) -> tuple[Edge, ...]:
        return cycle_edges(self.cycle)

    @property
    def n1(self) -> VertexSet:
        return frozenset(a.x for a in self.attach)

    @property
    def pieces(self) -> tuple[VertexSet, ...]:
        """Distinct pieces, in order of first appearance."""
        out: list[VertexSet] = []
        for a in self.attach:
            if a.piece not in out:
                out.append(a.piece)
        return tuple(out)

    @property
    def component(self) -> VertexSet:
        """Vertex set of the component containing the cycle."""
        out = set(self.cycle)
        for p in self.pieces:
            out |= p
        return frozenset(out)


def cycle_edges(cycle: tuple[int, ...] | list[int]) -> tuple[Edge, ...]:
    k = len(cycle)
    return tuple(sorted(norm_edge(cycle[i], cycle[(i + 1) % k]) for i in range(k)))


def canonical_cycle(cycle: list[int] | tuple[int, ...]) -> tuple[int, ...]:
    """Rotate so the minimum vertex leads, oriented towards its smaller neighbour."""
    k = len(cycle)
    i = min(range(k), key=cycle.__getitem__)
    fwd = [cycle[(i + j) % k] for j in range(k)]
    if k > 2 and fwd[-1] < fwd[1]:
        fwd = [fwd[0]] + fwd[:0:-1]
    return tuple(fwd)


def _odd_cycle_in(g: Graph, skip: Optional[Edge] = None) -> Optional[tuple[int, ...]]:
    """Simple odd cycle of ``g`` (optionally with one edge ignored), or None."""
    n = g.n
    color = [-1] * n
    parent = [-1] * n
    depth = [0] * n
    for root in range(n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if skip is not None and norm_edge(u, w) == skip:
                    continue
                if color[w] == -1:
                    color[w] = color[u] ^ 1
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif color[w] == color[u]:
                    return canonical_cycle(_close_cycle(parent, depth, u, w))
    return None


def _close_cycle(parent: list[int], depth: list[int], u: int, w: int) -> list[int]:
    # climb to the lowest common ancestor; the two tree paths are then disjoint
    left, right = [u], [w]
    a, b = u, w
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    right.pop()
    return left[::-1] + right


def find_odd_cycle(g: Graph) -> Optional[tuple[int, ...]]:
    """A simple odd cycle in canonical rotation, or ``None`` if ``g`` is bipartite."""
    return g.cached("odd_cycle", lambda: _odd_cycle_in(g))


def _is_bipartite_without(g: Graph, skip: Edge) -> bool:
    return _odd_cycle_in(g, skip) is None


def classify(g: Graph) -> GraphClass:
    return g.cached("class", lambda: _classify(g))


def _classify(g: Graph) -> GraphClass:
    cycle = find_odd_cycle(g)
    if cycle is None:
        return GraphClass(ClassTag.BIPARTITE)
    for e in cycle_edges(cycle):
        other = _odd_cycle_in(g, e)
        if other is not None:
            return GraphClass(ClassTag.OTHER, cycle, other, e)
    return GraphClass(ClassTag.ALMOST_BIPARTITE, cycle)


def is_unicyclic(g: Graph) -> bool:
    """Exactly one cycle: cycle rank ``m - n + c`` equals one."""
    return g.m - g.n + len(component_masks(g)) == 1


def decompose(g: Graph) -> OddCycleDecomposition:
    """Split an almost-bipartite graph into C, the N1(C) attachments and the rest.

    ``B_x`` is the component of ``G - V(C)`` containing ``x``. When that
    component meets C through a single edge ``xy`` this is exactly the
    component of ``G - xy`` containing ``x``. A component may also meet C
    through several vertices, all adjacent to the same cycle vertex (an even
    cycle sharing one vertex with C); its attachments then share one piece.
    """
    return g.cached("decomposition", lambda: _decompose(g))


def _decompose(g: Graph) -> OddCycleDecomposition:
    gc = classify(g)
    if not gc.is_almost_bipartite:
        raise GraphError(f"decompose needs an almost-bipartite graph, got {gc.tag.value}")
    cycle = gc.cycle
    cmask = to_mask(cycle)
    masks = g.masks
    outside = component_masks(g, g.full_mask & ~cmask)
    attach: list[Attachment] = []
    rest: list[VertexSet] = []
    for comp in outside:
        touching = [v for v in iter_bits(comp) if masks[v] & cmask]
        if not touching:
            rest.append(from_mask(comp))
            continue
        piece = from_mask(comp)
        for x in touching:
            on_cycle = masks[x] & cmask
            if on_cycle & (on_cycle - 1):
                raise InternalStructureViolation(f"vertex {x} has several neighbours on the odd cycle")
            attach.append(Attachment(x, on_cycle.bit_length() - 1, piece))
    attach.sort(key=lambda a: a.x)
    dec = OddCycleDecomposition(cycle, tuple(attach), tuple(rest))
    _validate(g, dec)
    return dec


def _validate(g: Graph, dec: OddCycleDecomposition) -> None:
    cmask = to_mask(dec.cycle)
    seen = cmask
    for p in dec.pieces:
        pm = to_mask(p)
        if pm & seen:
            raise InternalStructureViolation("pieces overlap each other or the cycle")
        seen |= pm
        color, _, conflict = bfs_two_coloring(g, pm)
        if conflict is not None or len(component_masks(g, pm)) != 1:
            raise InternalStructureViolation(f"piece {sorted(p)} is not connected bipartite")
        ys = {a.y for a in dec.attach if a.piece == p}
        if len(ys) != 1:
            raise InternalStructureViolation(f"piece {sorted(p)} meets the cycle at {sorted(ys)}")
    for comp in dec.rest:
        _, _, conflict = bfs_two_coloring(g, to_mask(comp))
        if conflict is not None:
            raise InternalStructureViolation(f"detached component {sorted(comp)} is not bipartite")
        seen |= to_mask(comp)
    if seen != g.full_mask:
        raise InternalStructureViolation("decomposition does not cover V(G)")
    comp_of_cycle = next(c for c in component_masks(g) if c & cmask)
    if to_mask(dec.component) != comp_of_cycle:
        raise InternalStructureViolation("cycle component is not V(C) plus its pieces")

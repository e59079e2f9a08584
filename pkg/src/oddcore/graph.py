"""Immutable simple undirected graphs on vertices ``0..n-1``.

Vertex sets are plain ``frozenset[int]``. Hot loops use integer bitmasks
internally (``Graph.masks``); :func:`to_mask` and :func:`from_mask` convert.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator
from typing import Optional

from .errors import EdgeListError, GraphError

Edge = tuple[int, int]
VertexSet = frozenset[int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def from_mask(mask: int) -> VertexSet:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A finite simple undirected graph.

    Vertices are ``0..n-1``. Instances are immutable and hashable; equality
    is ``(n, edge set)`` equality. A private cache holds derived values
    (classification and the like) that are pure functions of the graph.
    """

    __slots__ = ("_n", "_edges", "_adj", "_masks", "_cache", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        seen: set[Edge] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            e = norm_edge(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
        masks = [0] * n
        for u, v in seen:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self._n = n
        self._edges: tuple[Edge, ...] = tuple(sorted(seen))
        self._masks: tuple[int, ...] = tuple(masks)
        self._adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(iter_bits(m))) for m in masks)
        self._cache: dict = {}
        self._hash = hash((n, self._edges))

    @classmethod
    def from_masks(cls, masks: list[int]) -> Graph:
        n = len(masks)
        return cls(n, [(u, v) for u in range(n) for v in iter_bits(masks[u] >> (u + 1) << (u + 1))])

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[Edge, ...]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return self._edges

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhood bitmask per vertex."""
        return self._masks

    @property
    def vertices(self) -> range:
        return range(self._n)

    @property
    def full_mask(self) -> int:
        return (1 << self._n) - 1

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self._n and 0 <= v < self._n and bool(self._masks[u] >> v & 1)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        mask = to_mask(vertices)
        return all(not (self._masks[v] & mask) for v in iter_bits(mask))

    def cached(self, key, compute):
        try:
            return self._cache[key]
        except KeyError:
            value = self._cache[key] = compute()
            return value

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={list(self._edges)})"

    # pickling support for multiprocessing; the cache is not shipped
    def __getstate__(self):
        return (self._n, self._edges)

    def __setstate__(self, state):
        n, edges = state
        Graph.__init__(self, n, edges)


def _check_vertices(g: Graph, vertices: Iterable[int]) -> int:
    mask = to_mask(vertices)
    if mask >> g.n:
        raise GraphError(f"vertex set not contained in V(G) for n={g.n}")
    return mask


def neighborhood_mask(g: Graph, mask: int) -> int:
    out = 0
    masks = g.masks
    for v in iter_bits(mask):
        out |= masks[v]
    return out


def neighborhood(g: Graph, a: Iterable[int]) -> VertexSet:
    """N(A): every vertex adjacent to some member of ``a``."""
    return from_mask(neighborhood_mask(g, _check_vertices(g, a)))


def closed_neighborhood(g: Graph, a: Iterable[int]) -> VertexSet:
    mask = _check_vertices(g, a)
    return from_mask(mask | neighborhood_mask(g, mask))


def difference(g: Graph, x: Iterable[int]) -> int:
    """|X| - |N(X)|."""
    mask = _check_vertices(g, x)
    return mask.bit_count() - neighborhood_mask(g, mask).bit_count()


def induced(g: Graph, x: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph spanned by ``x``, relabelled ``0..|x|-1`` in ascending order.

    Returns the subgraph and the remap table ``old[i]`` giving the original
    label of new vertex ``i``.
    """
    old = tuple(sorted(from_mask(_check_vertices(g, x))))
    new = {v: i for i, v in enumerate(old)}
    edges = [(new[u], new[v]) for u, v in g.edges if u in new and v in new]
    return Graph(len(old), edges), old


def remove_vertices(g: Graph, w: Iterable[int]) -> Graph:
    """G - W, relabelled; use :func:`induced` when the remap table is needed."""
    keep = g.full_mask & ~_check_vertices(g, w)
    return induced(g, iter_bits(keep))[0]


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) not in graph")
    e = norm_edge(u, v)
    return Graph(g.n, [f for f in g.edges if f != e])


def add_edge(g: Graph, u: int, v: int) -> Graph:
    return Graph(g.n, g.edges + (norm_edge(u, v),))


def disjoint_union(*graphs: Graph) -> Graph:
    edges: list[Edge] = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges)
        offset += h.n
    return Graph(offset, edges)


def component_masks(g: Graph, within: Optional[int] = None) -> list[int]:
    """Connected components of ``G[within]`` as bitmasks, ordered by minimum vertex."""
    remaining = g.full_mask if within is None else within
    masks = g.masks
    out = []
    while remaining:
        low = remaining & -remaining
        comp = low
        frontier = low
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= masks[v]
            frontier = reach & remaining & ~comp
            comp |= frontier
        out.append(comp)
        remaining &= ~comp
    return out


def components(g: Graph) -> list[VertexSet]:
    return [from_mask(c) for c in component_masks(g)]


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(component_masks(g)) == 1


def bfs_two_coloring(g: Graph, within: Optional[int] = None) -> tuple[list[int], list[int], Optional[Edge]]:
    """Breadth-first 2-colouring of ``G[within]``.

    Returns ``(color, parent, conflict)``; ``color[v]`` is the BFS depth
    parity (-1 outside ``within``) and ``conflict`` is the first edge found
    joining two vertices of equal parity, or ``None`` when bipartite. Roots
    are the minimum vertex of each component, scanned in ascending order.
    """
    n = g.n
    allowed = g.full_mask if within is None else within
    color = [-1] * n
    parent = [-1] * n
    conflict: Optional[Edge] = None
    for root in iter_bits(allowed):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if not allowed >> w & 1:
                    continue
                if color[w] == -1:
                    color[w] = color[u] ^ 1
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u] and conflict is None:
                    conflict = norm_edge(u, w)
    return color, parent, conflict


def bipartition(g: Graph) -> Optional[tuple[VertexSet, VertexSet]]:
    """Proper 2-colouring ``(L, R)`` with each component's minimum vertex in ``L``.

    ``None`` when the graph has an odd cycle; :func:`odd_closed_walk` gives
    the witness.
    """
    color, _, conflict = bfs_two_coloring(g)
    if conflict is not None:
        return None
    left = frozenset(v for v in g.vertices if color[v] == 0)
    return left, frozenset(g.vertices) - left


def odd_closed_walk(g: Graph) -> Optional[list[int]]:
    """Odd closed walk ``[v0, v1, ..., v0]`` witnessing non-bipartiteness."""
    color, parent, conflict = bfs_two_coloring(g)
    if conflict is None:
        return None
    u, v = conflict
    pu = _tree_path(parent, u)
    pv = _tree_path(parent, v)
    # both paths end at the same BFS root
    return list(reversed(pu)) + pv


def _tree_path(parent: list[int], v: int) -> list[int]:
    path = [v]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    return path


# ---------------------------------------------------------------------------
# edge-list format


def parse_edge_list(text: str | Iterable[str]) -> Graph:
    """Parse the ``p <n>`` / ``<u> <v>`` edge-list format.

    ``#`` lines and blank lines are skipped. Self-loops, duplicate edges and
    out-of-range indices are rejected with the offending line number.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    n: Optional[int] = None
    edges: list[Edge] = []
    seen: dict[Edge, int] = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "p":
                raise EdgeListError(f"expected header 'p <n>', got {line!r}", lineno)
            n = _parse_int(tokens[1], lineno)
            if n < 0:
                raise EdgeListError(f"negative vertex count {n}", lineno)
            continue
        if len(tokens) != 2:
            raise EdgeListError(f"expected '<u> <v>', got {line!r}", lineno)
        u, v = _parse_int(tokens[0], lineno), _parse_int(tokens[1], lineno)
        for x in (u, v):
            if not 0 <= x < n:
                raise EdgeListError(f"vertex {x} out of range 0..{n - 1}", lineno)
        if u == v:
            raise EdgeListError(f"self-loop at vertex {u}", lineno)
        e = norm_edge(u, v)
        if e in seen:
            raise EdgeListError(f"duplicate edge {u} {v} (first on line {seen[e]})", lineno)
        seen[e] = lineno
        edges.append(e)
    if n is None:
        raise EdgeListError("missing 'p <n>' header")
    return Graph(n, edges)


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise EdgeListError(f"not an integer: {token!r}", lineno) from None


def format_edge_list(g: Graph) -> str:
    lines = [f"p {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"

"""Named fixtures, seeded random families and exhaustive enumeration.

Random streams use numpy's Philox4x64 counter-based generator keyed by
``SeedSequence([seed, *stream])``, so a corpus is identical across
platforms and independent of how its graphs are split between workers.

Fixture label tables::

    fig1  a=0 u=1 c=2 v=3, bottom row continues 4 5 6, b=7, upper row 8 9 10
    fig2  u=0 v=1 c=2 x=3 w=4 y=5 p=6 q=7 a=8 b=9 d=10 t=11 r=12 s=13
"""

from __future__ import annotations

import itertools
import re
from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np

from .errors import TooLargeError, UnknownFixtureError
from .graph import Graph

FIG1_LABELS = {"a": 0, "u": 1, "c": 2, "v": 3, "b": 7}
FIG2_LABELS = {
    "u": 0, "v": 1, "c": 2, "x": 3, "w": 4, "y": 5, "p": 6,
    "q": 7, "a": 8, "b": 9, "d": 10, "t": 11, "r": 12, "s": 13,
}

FIG1_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 7), (3, 8), (4, 8), (5, 9), (9, 10), (6, 10)]
FIG2_EDGES = [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 8),
    (2, 9), (3, 10), (10, 11), (5, 11), (6, 12), (12, 13), (7, 13),
]


def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def k2n_minus_e(n: int) -> Graph:
    """K_{2n} with the edge {0, 1} removed."""
    if n < 1:
        raise ValueError("k2n_minus_e needs n >= 1")
    return Graph(2 * n, [e for e in itertools.combinations(range(2 * n), 2) if e != (0, 1)])


def odd_cycle(k: int) -> Graph:
    """C_{2k+1}."""
    if k < 1:
        raise ValueError("odd_cycle needs k >= 1")
    return cycle_graph(2 * k + 1)


_STATIC = {
    "k1": lambda: Graph(1),
    "k2": lambda: Graph(2, [(0, 1)]),
    "k3": lambda: complete_graph(3),
    "p3": lambda: path_graph(3),
    "c4": lambda: cycle_graph(4),
    "c5": lambda: cycle_graph(5),
    "star3": lambda: Graph(4, [(0, 1), (0, 2), (0, 3)]),
    "paw": lambda: Graph(4, [(0, 1), (1, 2), (0, 2), (0, 3)]),
    "tri_p2": lambda: Graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4)]),
    "fig1": lambda: Graph(11, FIG1_EDGES),
    "fig2": lambda: Graph(14, FIG2_EDGES),
}

_PARAM = {"k2n_minus_e": k2n_minus_e, "odd_cycle": odd_cycle}

FIXTURE_NAMES = tuple(_STATIC) + ("k2n_minus_e(n)", "odd_cycle(k)")


def fixture(name: str) -> Graph:
    """Resolve ``paw``, ``fig2``, ``odd_cycle(3)``, ``k2n_minus_e(4)`` and so on."""
    key = name.strip().lower()
    if key in _STATIC:
        return _STATIC[key]()
    m = re.fullmatch(r"(\w+)\((\d+)\)", key)
    if m and m.group(1) in _PARAM:
        return _PARAM[m.group(1)](int(m.group(2)))
    raise UnknownFixtureError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")


def default_fixture_corpus() -> list[tuple[str, Graph]]:
    names = list(_STATIC) + [f"k2n_minus_e({n})" for n in (3, 4, 5)] + [f"odd_cycle({k})" for k in range(1, 6)]
    return [(name, fixture(name)) for name in names]


# ---------------------------------------------------------------------------
# randomness


def rng(seed: int, *stream: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, *stream])))


def _random_bipartite_tree(gen: np.random.Generator, size: int) -> tuple[list[int], list[tuple[int, int]]]:
    """Random spanning tree on ``size`` vertices with its 2-colouring ``side``."""
    side = [0]
    edges = []
    for v in range(1, size):
        u = int(gen.integers(v))
        side.append(side[u] ^ 1)
        edges.append((u, v))
    return side, edges


def _random_connected_bipartite(
    gen: np.random.Generator, size: int, extra_prob: float
) -> list[tuple[int, int]]:
    side, edges = _random_bipartite_tree(gen, size)
    present = set(edges)
    for u in range(size):
        for v in range(u + 1, size):
            if side[u] != side[v] and (u, v) not in present and gen.random() < extra_prob:
                edges.append((u, v))
    return edges


@dataclass(frozen=True)
class AlmostBipartiteModel:
    cycle_len: int = 5
    pieces: int = 2
    piece_size: tuple[int, int] = (1, 4)
    cross_edge_prob: float = 0.2
    extra_bipartite_components: int = 0
    seed: int = 0
    shuffle: bool = True

    def validate(self) -> None:
        if self.cycle_len < 3 or self.cycle_len % 2 == 0:
            raise ValueError(f"cycle_len must be odd and >= 3, got {self.cycle_len}")
        lo, hi = self.piece_size
        if not 1 <= lo <= hi:
            raise ValueError(f"piece_size must satisfy 1 <= lo <= hi, got {self.piece_size}")
        if self.pieces < 0 or self.extra_bipartite_components < 0:
            raise ValueError("piece and component counts must be non-negative")
        if not 0.0 <= self.cross_edge_prob <= 1.0:
            raise ValueError("cross_edge_prob must lie in [0, 1]")


def random_almost_bipartite(model: AlmostBipartiteModel, *stream: int) -> Graph:
    """Odd cycle plus connected bipartite pieces, each hung from the cycle by one edge."""
    model.validate()
    gen = rng(model.seed, *stream)
    lo, hi = model.piece_size
    pieces = [int(gen.integers(lo, hi + 1)) for _ in range(model.pieces)]
    extra = [int(gen.integers(lo, hi + 1)) for _ in range(model.extra_bipartite_components)]
    return build_almost_bipartite(gen, model.cycle_len, pieces, extra, model.cross_edge_prob, model.shuffle)


def build_almost_bipartite(
    gen: np.random.Generator,
    cycle_len: int,
    piece_sizes: list[int],
    extra_sizes: list[int] = (),
    cross_edge_prob: float = 0.2,
    shuffle: bool = True,
) -> Graph:
    k = cycle_len
    edges = [(i, (i + 1) % k) for i in range(k)]
    n = k
    for size in piece_sizes:
        local = _random_connected_bipartite(gen, size, cross_edge_prob)
        edges.extend((u + n, v + n) for u, v in local)
        edges.append((n + int(gen.integers(size)), int(gen.integers(k))))
        n += size
    for size in extra_sizes:
        local = _random_connected_bipartite(gen, size, cross_edge_prob)
        edges.extend((u + n, v + n) for u, v in local)
        n += size
    if shuffle:
        perm = [int(x) for x in gen.permutation(n)]
        edges = [(perm[u], perm[v]) for u, v in edges]
    return Graph(n, edges)


def random_almost_bipartite_sized(
    seed: int,
    index: int,
    min_n: int,
    max_n: int,
    cross_edge_prob: float = 0.2,
    pieces: int | None = None,
    detach_prob: float = 1 / 6,
) -> Graph:
    """Corpus member ``index``: total order drawn from ``[min_n, max_n]``.

    The cycle length is a random odd number up to 11. Without ``pieces`` the
    remaining vertices are cut into pieces of random size; with it they are
    cut into exactly that many (fewer if vertices run out). Each piece is
    left detached, as an extra bipartite component, with ``detach_prob``.
    """
    gen = rng(seed, 1, index)
    target = int(gen.integers(min_n, max_n + 1))
    top = min(target, 11)
    cycle_len = 2 * int(gen.integers(1, (top - 1) // 2 + 1)) + 1
    remaining = target - cycle_len
    if pieces is None:
        piece_max = max(1, min(remaining, max(4, remaining // 4)))
        sizes = []
        while remaining > 0:
            size = int(gen.integers(1, min(piece_max, remaining) + 1))
            sizes.append(size)
            remaining -= size
    else:
        k = min(pieces, remaining)
        cuts = sorted(int(c) for c in gen.choice(np.arange(1, remaining), size=k - 1, replace=False)) if k > 1 else []
        bounds = [0, *cuts, remaining] if k else [0]
        sizes = [b - a for a, b in zip(bounds, bounds[1:])]
    attached: list[int] = []
    extra: list[int] = []
    for size in sizes:
        (extra if gen.random() < detach_prob else attached).append(size)
    return build_almost_bipartite(gen, cycle_len, attached, extra, cross_edge_prob)


def random_bipartite(nl: int, nr: int, edge_prob: float, connected: bool = False, seed: int = 0, *stream: int) -> Graph:
    """Left part ``0..nl-1``, right part ``nl..nl+nr-1``.

    With ``connected`` a random spanning tree alternating between the parts
    is laid down first (both parts must then be non-empty unless the graph
    has a single vertex).
    """
    if nl < 0 or nr < 0 or not 0.0 <= edge_prob <= 1.0:
        raise ValueError("invalid random_bipartite parameters")
    gen = rng(seed, *stream)
    edges: set[tuple[int, int]] = set()
    if connected and nl + nr > 1:
        if nl == 0 or nr == 0:
            raise ValueError("a connected bipartite graph needs both parts non-empty")
        order_l = [int(x) for x in gen.permutation(nl)]
        order_r = [nl + int(x) for x in gen.permutation(nr)]
        placed_l, placed_r = [order_l[0]], [order_r[0]]
        edges.add((order_l[0], order_r[0]))
        for v in order_l[1:]:
            edges.add((v, placed_r[int(gen.integers(len(placed_r)))]))
            placed_l.append(v)
        for v in order_r[1:]:
            edges.add((placed_l[int(gen.integers(len(placed_l)))], v))
            placed_r.append(v)
    for u in range(nl):
        for v in range(nl, nl + nr):
            if (u, v) not in edges and gen.random() < edge_prob:
                edges.add((u, v))
    return Graph(nl + nr, sorted(edges))


def random_general(n: int, p: float, seed: int = 0, *stream: int) -> Graph:
    """G(n, p), pairs visited in lexicographic order."""
    gen = rng(seed, *stream)
    return Graph(n, [e for e in itertools.combinations(range(n), 2) if gen.random() < p])


# ---------------------------------------------------------------------------
# exhaustive enumeration

ENUMERATION_LIMIT = 7


def enumerate_labeled_graphs(n: int, start: int = 0, stop: int | None = None) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices; bit ``i`` of the mask selects the i-th pair.

    ``start``/``stop`` slice the edge-mask range for partitioned runs.
    """
    if n > ENUMERATION_LIMIT:
        raise TooLargeError(f"exhaustive enumeration supports n <= {ENUMERATION_LIMIT}, got {n}")
    pairs = list(itertools.combinations(range(n), 2))
    total = 1 << len(pairs)
    stop = total if stop is None else min(stop, total)
    for mask in range(start, stop):
        yield Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def labeled_graph_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)

import itertools

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from oddcore.generators import AlmostBipartiteModel, fixture, random_almost_bipartite
from oddcore.graph import Graph

# oracle sweeps have uneven running times; determinism matters more than speed here
settings.register_profile("oddcore", deadline=None, derandomize=True, print_blob=True)
settings.load_profile("oddcore")

# fixture label tables, used to phrase expectations in the figure's own names
FIG1 = {"a": 0, "u": 1, "c": 2, "v": 3, "b": 7}
FIG2 = {
    "u": 0, "v": 1, "c": 2, "x": 3, "w": 4, "y": 5, "p": 6,
    "q": 7, "a": 8, "b": 9, "d": 10, "t": 11, "r": 12, "s": 13,
}


def labels(table, names):
    return frozenset(table[c] for c in names)


@pytest.fixture
def fig1():
    return fixture("fig1")


@pytest.fixture
def fig2():
    return fixture("fig2")


@pytest.fixture
def paw():
    return fixture("paw")


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


@st.composite
def almost_bipartite_graphs(draw, max_pieces=3, max_piece=5):
    model = AlmostBipartiteModel(
        cycle_len=draw(st.sampled_from([3, 5, 7])),
        pieces=draw(st.integers(0, max_pieces)),
        piece_size=(1, max_piece),
        cross_edge_prob=draw(st.sampled_from([0.0, 0.2, 0.5])),
        extra_bipartite_components=draw(st.integers(0, 1)),
        seed=draw(st.integers(0, 2**32 - 1)),
    )
    return random_almost_bipartite(model)


def pytest_terminal_summary(terminalreporter):
    from . import acceptance_log

    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for number in sorted(acceptance_log.LINES):
            terminalreporter.write_line(acceptance_log.LINES[number])

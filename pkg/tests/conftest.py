import hypothesis
import pytest
from hypothesis import strategies as st

from maclane.graph import Graph, complete_bipartite, complete_graph, cycle_graph, theta_graph

hypothesis.settings.register_profile("ci", deadline=None, max_examples=100)
hypothesis.settings.register_profile("fast", deadline=None, max_examples=10)
hypothesis.settings.load_profile("ci")

# filled by test_acceptance, printed after the run
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")


@st.composite
def multigraphs(draw, max_vertices=6, max_edges=10):
    """Small loopless multigraphs on ``0..n-1`` with edge ids ``0..m-1``."""
    n = draw(st.integers(1, max_vertices))
    if n == 1:
        return Graph([0], {})
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
    pairs = draw(st.lists(pair, max_size=max_edges))
    return Graph.from_edge_list(pairs, range(n))


@st.composite
def ear_graphs(draw, max_ears=4, max_len=3):
    """2-connected multigraphs grown from a cycle by open ears.

    Every 2-connected graph has such a decomposition, so this reaches all of
    them given enough ears.
    """
    n = draw(st.integers(2, 5))
    pairs = [(i, (i + 1) % n) for i in range(n)]
    nv = n
    for _ in range(draw(st.integers(0, max_ears))):
        x = draw(st.integers(0, nv - 1))
        y = draw(st.integers(0, nv - 1).filter(lambda v: v != x))
        inner = list(range(nv, nv + draw(st.integers(0, max_len - 1))))
        nv += len(inner)
        path = [x] + inner + [y]
        pairs += list(zip(path, path[1:]))
    return Graph.from_edge_list(pairs, range(nv))


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def k5():
    return complete_graph(5)


@pytest.fixture
def k33():
    return complete_bipartite(3, 3)


@pytest.fixture
def triangle():
    return cycle_graph(3)


@pytest.fixture
def theta():
    # ends 0 and 1, paths of lengths 1, 2, 2
    return theta_graph(1, 2, 2)


@pytest.fixture
def two_cycle():
    return Graph.from_edge_list([(0, 1), (0, 1)])

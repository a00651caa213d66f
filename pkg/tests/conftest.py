import itertools

import pytest
from hypothesis import strategies as st

from hyperbounds.hypergraph import Hypergraph, complete, from_edges, parse, single_edge

# criterion label -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE, key=lambda s: int(s.split()[0])):
        ok, detail = ACCEPTANCE[label]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}: {detail}")


@pytest.fixture
def p3():
    return parse("3 2 2\n1 2\n2 3")


@pytest.fixture
def star():
    return from_edges(4, 2, [(1, 2), (1, 3), (1, 4)])


@pytest.fixture
def k4():
    return complete(4, 2)


@pytest.fixture
def tri():
    """The single 3-edge on three vertices."""
    return single_edge(3, 3)


@pytest.fixture
def c43():
    """Complete 3-uniform hypergraph on 4 vertices."""
    return complete(4, 3)


@st.composite
def hypergraphs(draw, max_n=8, max_k=4, connected=False):
    k = draw(st.integers(2, max_k))
    n = draw(st.integers(k, max(k, max_n)))
    subsets = list(itertools.combinations(range(1, n + 1), k))
    chosen = draw(st.lists(st.sampled_from(subsets), unique=True, max_size=min(len(subsets), 20)))
    return Hypergraph(n, k, tuple(chosen))


@st.composite
def degree_inputs(draw, max_n=30):
    """(degrees, n, k) with degrees sorted non-increasing; not necessarily graphical."""
    k = draw(st.integers(2, 6))
    n = draw(st.integers(k, max(k, max_n)))
    degs = draw(st.lists(st.integers(0, 200), min_size=n, max_size=n))
    return tuple(sorted(degs, reverse=True)), n, k

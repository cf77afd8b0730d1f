import itertools
import sys

import networkx as nx
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from cliquechroma import Graph

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, b in zip(pairs, bits) if b])


def to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def nx_maximal_cliques(G, min_size=2):
    """Maximal cliques from networkx, as frozensets, independent of our search code."""
    return {frozenset(c) for c in nx.find_cliques(to_nx(G)) if len(c) >= min_size}


@pytest.fixture
def triangle_pendant():
    # triangle 0-1-2 plus vertex 3 joined to 0 and 1
    return Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3)])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)

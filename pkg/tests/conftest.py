"""Shared strategies and fixtures for the test suite."""

from itertools import combinations

import pytest
from hypothesis import strategies as st

from tdgamelab import build_graph
from tdgamelab.families import path_graph


@st.composite
def graphs(draw, min_n=2, max_n=7):
    """Arbitrary simple graphs drawn from a uniform edge mask."""
    n = draw(st.integers(min_n, max_n))
    slots = list(combinations(range(n), 2))
    mask = draw(st.integers(0, (1 << len(slots)) - 1))
    edges = [e for i, e in enumerate(slots) if mask >> i & 1]
    return build_graph(n, edges)


@st.composite
def isolate_free_graphs_st(draw, min_n=2, max_n=7):
    """Isolate-free graphs: arbitrary draws padded with a perfect-ish matching."""
    G = draw(graphs(min_n, max_n))
    extra = []
    for v in range(G.n):
        if G.degree(v) == 0:
            extra.append((v, (v + 1) % G.n))
    if not extra:
        return G
    return build_graph(G.n, G.edges() + extra)


@pytest.fixture(scope="session")
def small_paths():
    return {n: path_graph(n) for n in range(2, 11)}

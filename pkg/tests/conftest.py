from itertools import combinations

import numpy as np
import pytest
from hypothesis import strategies as st

from cherrylab.hypergraph import ColouredGraph, Hypergraph3


def edge_from_mask(n, mask):
    triples = list(combinations(range(n), 3))
    return Hypergraph3(n, frozenset(t for i, t in enumerate(triples) if mask >> i & 1))


@st.composite
def hypergraphs(draw, min_n=0, max_n=6):
    n = draw(st.integers(min_n, max_n))
    triples = list(combinations(range(n), 3))
    chosen = draw(st.lists(st.sampled_from(triples), unique=True) if triples else st.just([]))
    return Hypergraph3(n, frozenset(chosen))


@st.composite
def colourings(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    codes = draw(st.lists(st.integers(0, 2), min_size=len(pairs), max_size=len(pairs)))
    red = np.zeros((n, n), dtype=bool)
    for (u, v), c in zip(pairs, codes):
        if c == 1:
            red[u, v] = True
        elif c == 2:
            red[v, u] = True
    return ColouredGraph(red)


@pytest.fixture
def edge():
    return Hypergraph3.from_edges(3, [(0, 1, 2)])


@pytest.fixture
def c5():
    return Hypergraph3.tight_cycle(5)


@pytest.fixture
def k4():
    return Hypergraph3.complete(4)

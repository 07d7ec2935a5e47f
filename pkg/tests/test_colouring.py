from itertools import combinations, product

import numpy as np
import pytest
from hypothesis import given, settings

from cherrylab.colouring import (block_colouring, cherries, cherry_count, construct_good_colouring,
                                 extremal_colouring, is_cherry, verify_good_colouring)
from cherrylab.extremal import construct_iterated, f_table
from cherrylab.hypergraph import ColouredGraph, Hypergraph3
from cherrylab.oracle import random_colouring, random_hypergraph
from cherrylab.pairwalk import CycleWitness, detect_odd_pseudocycle, is_pseudocycle

from conftest import colourings, hypergraphs


def naive_cherries(G):
    count = 0
    for x, y, z in combinations(range(G.n), 3):
        for a, b, c in ((x, y, z), (y, x, z), (z, x, y)):
            if G.red_from(a, b) == a and G.red_from(a, c) == a and G.red_from(b, c) is None:
                count += 1
    return count


def test_cherry_count_examples():
    assert cherry_count(ColouredGraph.from_arcs(3, [(0, 1), (0, 2)])) == 1
    assert cherry_count(ColouredGraph.all_blue(6)) == 0
    G = ColouredGraph.from_arcs(4, [(3, 0), (3, 1), (3, 2)])
    assert cherry_count(G) == 3
    assert cherries(G) == [(3, 0, 1), (3, 0, 2), (3, 1, 2)]
    assert cherry_count(ColouredGraph.all_blue(0)) == 0


def test_max_over_k4_colourings():
    best = 0
    pairs = list(combinations(range(4), 2))
    for codes in product(range(3), repeat=len(pairs)):
        arcs = [(u, v) if c == 1 else (v, u) for (u, v), c in zip(pairs, codes) if c]
        best = max(best, cherry_count(ColouredGraph.from_arcs(4, arcs)))
    assert best == 3


@given(colourings(max_n=8))
def test_cherry_count_matches_naive(G):
    assert cherry_count(G) == naive_cherries(G) == len(cherries(G))
    assert all(is_cherry(G, (y, x, z)) for x, y, z in cherries(G))


def test_verify_examples(edge):
    assert verify_good_colouring(edge, ColouredGraph.from_arcs(3, [(0, 1), (0, 2)]))
    assert not verify_good_colouring(edge, ColouredGraph.all_blue(3))
    assert verify_good_colouring(construct_iterated([3, 1]), block_colouring([3, 1]))
    with pytest.raises(ValueError):
        verify_good_colouring(edge, ColouredGraph.all_blue(4))


def test_good_colouring_single_edge(edge):
    G = construct_good_colouring(edge)
    assert verify_good_colouring(edge, G)
    assert cherry_count(G) == 1
    assert construct_good_colouring(edge) == G


def test_good_colouring_c5_is_witness(c5):
    w = construct_good_colouring(c5)
    assert isinstance(w, CycleWitness) and len(w) == 5


def test_good_colouring_c6_every_third_vertex():
    C6 = Hypergraph3.tight_cycle(6)
    G = construct_good_colouring(C6)
    assert verify_good_colouring(C6, G)
    apexes = sorted(x for x in range(6) if G.out_neighbours(x))
    assert len(apexes) == 2 and apexes[1] - apexes[0] == 3


def test_good_colouring_non_shadow_pairs_blue():
    H = Hypergraph3.from_edges(6, [(0, 1, 2), (3, 4, 5)])
    G = construct_good_colouring(H)
    assert verify_good_colouring(H, G)
    for u, v in combinations(range(6), 2):
        if (u < 3) != (v < 3):
            assert G.is_blue(u, v)


@given(hypergraphs(max_n=7))
@settings(max_examples=200, deadline=None)
def test_soundness_and_completeness(H):
    res = construct_good_colouring(H)
    if isinstance(res, CycleWitness):
        assert is_pseudocycle(H, res.seq) and len(res) % 3 != 0
    else:
        assert verify_good_colouring(H, res)
        assert H.m <= cherry_count(res)


def test_soundness_random_larger():
    rng = np.random.default_rng(8)
    found = 0
    for _ in range(300):
        n = int(rng.integers(6, 13))
        H = random_hypergraph(n, float(rng.uniform(0.01, 0.08)), rng)
        res = construct_good_colouring(H)
        if not isinstance(res, CycleWitness):
            assert verify_good_colouring(H, res)
            found += 1
    for n in range(2, 13):
        for parts in ([n - 1, 1], [n // 2, n - n // 2]):
            if parts[0] >= parts[1] >= 1:
                H = construct_iterated(parts)
                assert verify_good_colouring(H, construct_good_colouring(H))
    assert found > 20


@given(colourings(max_n=8))
def test_good_colouring_excludes_odd_cycles(G):
    # the hypergraph of all cherries of G is coloured well by G
    H = Hypergraph3.from_edges(G.n, [(x, y, z) for x, y, z in cherries(G)])
    assert verify_good_colouring(H, G)
    assert detect_odd_pseudocycle(H) is None


def test_extremal_colouring_examples():
    assert extremal_colouring(1).n == 1 and cherry_count(extremal_colouring(1)) == 0
    assert extremal_colouring(4) == block_colouring([3, 1])
    assert cherry_count(extremal_colouring(4)) == 3
    assert cherry_count(extremal_colouring(7)) == 20
    with pytest.raises(ValueError):
        extremal_colouring(0)


def test_extremal_colouring_attains_f():
    table = f_table(200)
    for n in range(1, 201):
        assert cherry_count(extremal_colouring(n)) == table[n]


def test_cherry_bound_random():
    table = f_table(40)
    rng = np.random.default_rng(5)
    for _ in range(200):
        n = int(rng.integers(1, 41))
        assert cherry_count(random_colouring(n, rng, float(rng.uniform(0.05, 0.9)))) <= table[n]

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from cherrylab.extremal import construct_iterated, optimal_profile
from cherrylab.hypergraph import Hypergraph3, codegrees
from cherrylab.oracle import (count_pseudocycles, diameter_bruteforce, random_hypergraph,
                              shortest_odd_bruteforce)
from cherrylab.pairwalk import (CycleWitness, build_pair_digraph, closed_walk_count,
                                detect_odd_pseudocycle, diameter, extend_pseudocycle, is_pseudocycle,
                                is_pseudopath, residue_reachability, shortest_pseudopath, tilde,
                                trim_small_codegree)

from conftest import hypergraphs


def random_pseudopath(H, rng, order):
    pd = build_pair_digraph(H)
    node = pd.nodes[rng.integers(len(pd.nodes))]
    seq = list(node)
    while len(seq) < order and pd.succ[node]:
        node = pd.succ[node][rng.integers(len(pd.succ[node]))]
        seq.append(node[1])
    return tuple(seq)


def test_pair_digraph_single_edge(edge):
    pd = build_pair_digraph(edge)
    assert len(pd.nodes) == 6
    assert sorted(pd.arcs()) == sorted([((0, 1), (1, 2)), ((1, 2), (2, 0)), ((2, 0), (0, 1)),
                                        ((1, 0), (0, 2)), ((0, 2), (2, 1)), ((2, 1), (1, 0))])


def test_pair_digraph_small_cases(c5):
    assert len(build_pair_digraph(Hypergraph3(4, frozenset())).nodes) == 0
    pd = build_pair_digraph(c5)
    assert len(pd.nodes) == 20
    assert len(pd.arcs()) == 6 * c5.m
    # forward pairs (i, i+1) continue to i+2 and, against the orientation, to i-1
    assert sorted(pd.succ[(0, 1)]) == [(1, 2), (1, 4)]
    assert list(pd.succ[(0, 2)]) == [(2, 1)]


@given(hypergraphs(max_n=6))
@settings(max_examples=50, deadline=None)
def test_arcs_match_edges(H):
    pd = build_pair_digraph(H)
    arcs = set(pd.arcs())
    for (x, y), (y2, z) in arcs:
        assert y == y2 and H.has_edge(x, y, z)
    for a, b, c in H.edges:
        for x, y, z in ((a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)):
            assert ((x, y), (y, z)) in arcs


def test_is_pseudocycle(c5, edge):
    assert is_pseudocycle(c5, (0, 1, 2, 3, 4))
    assert is_pseudocycle(edge, (0, 1, 2))
    assert not is_pseudocycle(c5, (0, 1, 2, 3))
    assert not is_pseudocycle(edge, (0, 1, 2, 0, 1, 2, 0))
    with pytest.raises(ValueError):
        is_pseudocycle(edge, (0, 1))


def test_tilde_examples(k4, c5, edge):
    assert tilde(k4, (0, 1, 2, 3)) == (2, 3, 1, 2, 0, 1)
    assert tilde(edge, (0, 1, 2)) == (1, 2, 0, 1)
    P = (0, 1, 2, 3, 4)
    assert tilde(c5, tilde(c5, P))[:2] == (0, 1)
    with pytest.raises(ValueError):
        tilde(c5, (0, 1, 3))
    with pytest.raises(ValueError):
        tilde(c5, (0, 1))


def test_tilde_contract_on_samples():
    rng = np.random.default_rng(11)
    checked = 0
    while checked < 200:
        H = random_hypergraph(int(rng.integers(4, 9)), 0.5, rng)
        if not H.edges:
            continue
        P = random_pseudopath(H, rng, int(rng.integers(3, 10)))
        if len(P) < 3:
            continue
        T = tilde(H, P)
        k = len(P)
        assert is_pseudopath(H, T) and len(T) == 2 * k - 2
        assert T[:2] == P[-2:] and T[-2:] == P[:2]
        checked += 1


def test_shortest_pseudopath(edge, c5):
    assert shortest_pseudopath(edge, (0, 1), (2, 0)) == (0, 1, 2, 0)
    assert shortest_pseudopath(c5, (3, 1), (3, 1)) == (3, 1)
    assert shortest_pseudopath(edge, (0, 1), (1, 0)) is None
    with pytest.raises(ValueError):
        shortest_pseudopath(edge, (0, 0), (0, 1))
    with pytest.raises(ValueError):
        shortest_pseudopath(edge, (0, 1), (0, 7))


def test_residue_reachability(edge):
    pd = build_pair_digraph(edge)
    res = residue_reachability(pd, (0, 1))
    assert res == {((0, 1), 0): 0, ((1, 2), 1): 1, ((2, 0), 2): 2}
    for (node, r), L in residue_reachability(build_pair_digraph(Hypergraph3.complete(4)), (0, 1)).items():
        assert L % 3 == r


def test_detect_odd_examples(c5, edge, k4):
    w = detect_odd_pseudocycle(c5)
    assert len(w) == 5 and is_pseudocycle(c5, w.seq)
    assert detect_odd_pseudocycle(edge) is None
    w = detect_odd_pseudocycle(k4)
    assert len(w) == 4 and is_pseudocycle(k4, w.seq)
    for n in range(1, 13):
        assert detect_odd_pseudocycle(construct_iterated(optimal_profile(n))) is None
    assert detect_odd_pseudocycle(construct_iterated([4, 3, 3, 1])) is None


@given(hypergraphs(max_n=6))
@settings(max_examples=150, deadline=None)
def test_witness_valid_and_minimal(H):
    w = detect_odd_pseudocycle(H)
    brute = shortest_odd_bruteforce(H, 15)
    if w is None:
        assert brute is None
    else:
        assert isinstance(w, CycleWitness)
        assert is_pseudocycle(H, w.seq) and len(w) % 3 != 0
        assert len(w) == brute


def test_detect_is_deterministic(k4):
    assert detect_odd_pseudocycle(k4) == detect_odd_pseudocycle(Hypergraph3.complete(4))


@given(hypergraphs(max_n=5), st.integers(3, 9))
@settings(max_examples=80, deadline=None)
def test_walk_bijection(H, length):
    assert closed_walk_count(build_pair_digraph(H), length) == count_pseudocycles(H, length)


def test_diameter_examples(edge, c5):
    assert diameter(edge) == (4, False)
    d = diameter(Hypergraph3(3, frozenset()))
    assert d.value == 2 and d.vacuous
    assert diameter(c5).value == diameter_bruteforce(c5, max_order=12)


@given(hypergraphs(max_n=7))
@settings(max_examples=60, deadline=None)
def test_diameter_matches_bruteforce(H):
    assert diameter(H).value == diameter_bruteforce(H)


def test_short_odd_cycle_bound():
    rng = np.random.default_rng(4)
    seen = 0
    for _ in range(400):
        H = random_hypergraph(int(rng.integers(5, 9)), float(rng.uniform(0.05, 0.4)), rng)
        ell = diameter(H).value
        w = detect_odd_pseudocycle(H)
        if ell >= 4 and w is not None:
            assert len(w) <= 4 * ell
            seen += 1
    assert seen > 50


def test_trim_examples(edge, k4):
    assert trim_small_codegree(edge, 2).m == 0
    assert trim_small_codegree(k4, 2) == k4
    assert trim_small_codegree(k4, 1) == k4
    with pytest.raises(ValueError):
        trim_small_codegree(k4, 0)


@given(hypergraphs(max_n=8), st.integers(1, 5))
@settings(max_examples=80, deadline=None)
def test_trim_bound_and_fixpoint(H, c):
    T = trim_small_codegree(H, c)
    assert T.edges <= H.edges
    assert T.m >= H.m - c * H.n * (H.n - 1) // 2
    assert all(k >= c for k in codegrees(T).values())
    assert trim_small_codegree(T, c) == T
    assert trim_small_codegree(H, 1) == H


def test_extend_examples(c5):
    C = (0, 1, 2, 3, 4)
    assert extend_pseudocycle(C, 11).seq == (0, 1, 2, 0, 1, 2, 0, 1, 2, 3, 4)
    assert extend_pseudocycle(C, 13).seq == (0, 1, 2, 0, 1, 2, 3, 4, 0, 1, 2, 3, 4)
    assert extend_pseudocycle(C, 5).seq == C
    for m in (6, 9, 12):
        with pytest.raises(ValueError):
            extend_pseudocycle(C, m)
    with pytest.raises(ValueError):
        extend_pseudocycle(C, 7)  # 7 = 2*5 (mod 3) but shorter than two laps


@given(st.integers(0, 40))
def test_extend_validates(m):
    C5 = Hypergraph3.tight_cycle(5)
    K4 = Hypergraph3.complete(4)
    for H, C in ((C5, (0, 1, 2, 3, 4)), (K4, (0, 1, 2, 3))):
        L = len(C)
        assume(m % 3 != 0)
        ok = (m >= L and (m - L) % 3 == 0) or (m >= 2 * L and (m - 2 * L) % 3 == 0)
        if ok:
            w = extend_pseudocycle(C, m)
            assert len(w) == m and is_pseudocycle(H, w.seq)
        else:
            with pytest.raises(ValueError):
                extend_pseudocycle(C, m)

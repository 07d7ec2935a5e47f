"""Cherries and good colourings.

A cherry ``xyz`` has red arcs ``x->y`` and ``x->z`` and a blue pair ``yz``;
``x`` is the apex. A good colouring of a hypergraph makes every edge a cherry.
:func:`construct_good_colouring` either builds one or returns a shortest odd
pseudocycle proving that none exists.
"""

from __future__ import annotations

from collections import deque

import numpy as np

from .extremal import blocks, f_table, optimal_profile
from .hypergraph import ColouredGraph, Hypergraph3, Pair
from .pairwalk import CycleWitness, PairDigraph, build_pair_digraph, detect_odd_pseudocycle


class InconsistencyError(RuntimeError):
    """Raised when the colouring construction meets a state that odd-freeness rules out."""


def cherry_count(G: ColouredGraph) -> int:
    r = G.red.astype(np.int64)
    b = G.blue_matrix().astype(np.int64)
    # sum over apexes x of blue pairs inside N+(x), each pair counted twice
    return int(((r @ b) * r).sum()) // 2


def cherries(G: ColouredGraph) -> list[tuple[int, int, int]]:
    """All cherries as ``(apex, y, z)`` with ``y < z``."""
    out = []
    for x in range(G.n):
        nb = G.out_neighbours(x)
        for i, y in enumerate(nb):
            for z in nb[i + 1:]:
                if G.is_blue(y, z):
                    out.append((x, y, z))
    return out


def is_cherry(G: ColouredGraph, edge) -> bool:
    a, b, c = edge
    for x, y, z in ((a, b, c), (b, a, c), (c, a, b)):
        if G.red[x, y] and G.red[x, z] and G.is_blue(y, z):
            return True
    return False


def verify_good_colouring(H: Hypergraph3, G: ColouredGraph) -> bool:
    if G.n != H.n:
        raise ValueError(f"colouring has {G.n} vertices, hypergraph has {H.n}")
    return all(is_cherry(G, e) for e in H.edges)


def tight_components(pd: PairDigraph) -> list[set]:
    """Node sets of the tight components, smallest pair first.

    Weak components of the pair digraph are strongly connected; a component
    and its mirror image (all pairs reversed) cover the same edges, so they
    are merged.
    """
    comp_of: dict = {}
    comps: list[set] = []
    for p in pd.nodes:
        if p in comp_of:
            continue
        comp = {p}
        queue = deque([p])
        while queue:
            u = queue.popleft()
            for v in pd.succ[u]:
                if v not in comp:
                    comp.add(v)
                    queue.append(v)
        for q in comp:
            comp_of[q] = len(comps)
        comps.append(comp)
    merged: list[set] = []
    done: set[int] = set()
    for i, comp in enumerate(comps):
        if i in done:
            continue
        p = next(iter(comp))
        j = comp_of[(p[1], p[0])]
        done |= {i, j}
        merged.append(comp | comps[j])
    return merged


def _residues(pd: PairDigraph, base) -> dict:
    """Length mod 3 of walks from ``base``; raises if a node gets two residues."""
    res = {base: 0}
    queue = deque([base])
    while queue:
        p = queue.popleft()
        for q in pd.succ[p]:
            r = (res[p] + 1) % 3
            if q not in res:
                res[q] = r
                queue.append(q)
            elif res[q] != r:
                raise InconsistencyError(f"pair {q} reached with residues {res[q]} and {r}")
    return res


def colour_tight_component(pd: PairDigraph, component: set) -> dict[Pair, int | None]:
    """Colour the shadow pairs of one tight component of an odd-free hypergraph.

    The base is the smallest pair ``(x, y)`` in the component (so ``x < y``);
    only pairs reachable from it are coloured, which covers every edge.
    In a walk from ``(x, y)`` the vertex at position i (x at 0, y at 1) is an
    apex iff i = sigma (mod 3), where sigma = 2k (mod 3) for the order k+1 of
    a shortest pseudopath from ``xy`` to ``yx``, or sigma = 2 if none exists.
    """
    base = min(component)  # sorted pairs: the smallest always has x < y
    res = _residues(pd, base)
    back = (base[1], base[0])
    # a walk of length d from (x, y) to (y, x) is a path of order k + 1 = d + 2;
    # every such d has the residue recorded in res[back]
    sigma = 2 * (res[back] + 1) % 3 if back in res else 2
    colours: dict[Pair, int | None] = {}
    for (z, w), r in res.items():
        if r == sigma:
            apex = z
        elif (r + 1) % 3 == sigma:
            apex = w
        else:
            apex = None
        key = (z, w) if z < w else (w, z)
        if key in colours and colours[key] != apex:
            raise InconsistencyError(f"pair {key} coloured inconsistently")
        colours[key] = apex
    return colours


def construct_good_colouring(H: Hypergraph3) -> ColouredGraph | CycleWitness:
    """A good colouring of H (non-shadow pairs blue), or a shortest odd pseudocycle."""
    witness = detect_odd_pseudocycle(H)
    if witness is not None:
        return witness
    pd = build_pair_digraph(H)
    red = np.zeros((H.n, H.n), dtype=bool)
    for comp in tight_components(pd):
        for (u, v), apex in colour_tight_component(pd, comp).items():
            if apex is not None:
                red[apex, v if apex == u else u] = True
    G = ColouredGraph(red)
    if not verify_good_colouring(H, G):
        raise InconsistencyError("constructed colouring is not good")
    return G


def extremal_colouring(n: int) -> ColouredGraph:
    """Blue blocks from the optimal profile; arcs between blocks point to the earlier block."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    parts = optimal_profile(n, f_table(n))
    return block_colouring(parts)


def block_colouring(parts) -> ColouredGraph:
    n = sum(parts)
    red = np.zeros((n, n), dtype=bool)
    bl = blocks(parts)
    for i, bi in enumerate(bl):
        for bj in bl[i + 1:]:
            red[bj.start:bj.stop, bi.start:bi.stop] = True
    return ColouredGraph(red)


"""Brute-force ground truth at tiny scale.

Nothing here calls into :mod:`cherrylab.pairwalk` or :mod:`cherrylab.colouring`;
the searches work directly from edge sets and colour codes so they can be used
to check those modules.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb
from typing import Any

import numpy as np

from .hypergraph import ColouredGraph, Hypergraph3

MAX_EDGES_N = 6
MAX_CHERRIES_N = 5


@dataclass
class SearchReport:
    n: int
    objective: str
    value: int
    witness: Any
    count: int | None = None
    nodes: int = 0
    extra: dict = field(default_factory=dict)


class _PotentialUnionFind:
    """Union-find over ordered pairs with labels mod 3 and undo.

    ``union(a, b, 1)`` asserts label(b) = label(a) + 1. A hypergraph is free of
    odd pseudocycles iff every arc ``(x,y) -> (y,z)`` can be asserted this way.
    """

    def __init__(self, size: int) -> None:
        self.parent = list(range(size))
        self.rank = [0] * size
        self.pot = [0] * size  # label(v) - label(parent(v)) mod 3
        self.history: list[tuple[int, int, int] | None] = []

    def find(self, v: int) -> tuple[int, int]:
        p = 0
        while self.parent[v] != v:
            p += self.pot[v]
            v = self.parent[v]
        return v, p % 3

    def union(self, a: int, b: int, w: int) -> bool:
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        if ra == rb:
            self.history.append(None)
            return (pb - pa) % 3 == w % 3
        d = (pa + w - pb) % 3  # label(rb) - label(ra)
        if self.rank[ra] < self.rank[rb]:
            ra, rb, d = rb, ra, (-d) % 3
        self.parent[rb] = ra
        self.pot[rb] = d
        bumped = self.rank[ra] == self.rank[rb]
        if bumped:
            self.rank[ra] += 1
        self.history.append((rb, ra, int(bumped)))
        return True

    def mark(self) -> int:
        return len(self.history)

    def undo(self, mark: int) -> None:
        while len(self.history) > mark:
            op = self.history.pop()
            if op is None:
                continue
            rb, ra, bumped = op
            self.parent[rb] = rb
            self.pot[rb] = 0
            self.rank[ra] -= bumped


def _add_edge(uf: _PotentialUnionFind, n: int, e) -> bool:
    a, b, c = e
    for x, y, z in ((a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)):
        if not uf.union(x * n + y, y * n + z, 1):
            return False
    return True


def is_odd_free(H: Hypergraph3) -> bool:
    """Odd-freeness via consistent mod-3 labels on ordered pairs."""
    uf = _PotentialUnionFind(H.n * H.n)
    return all(_add_edge(uf, H.n, e) for e in H.sorted_edges())


def _odd_free_search(n: int, prefix: tuple[bool, ...]) -> tuple[int, list | None, int]:
    triples = list(combinations(range(n), 3))
    uf = _PotentialUnionFind(n * n)
    chosen: list = []
    for e, take in zip(triples, prefix):
        if take:
            if not _add_edge(uf, n, e):
                return -1, None, 1
            chosen.append(e)
    best = [-1, None]
    nodes = 0

    def dfs(i: int) -> None:
        nonlocal nodes
        nodes += 1
        if len(chosen) + len(triples) - i <= best[0]:
            return
        if i == len(triples):
            best[0], best[1] = len(chosen), list(chosen)
            return
        mark = uf.mark()
        if _add_edge(uf, n, triples[i]):
            chosen.append(triples[i])
            dfs(i + 1)
            chosen.pop()
        uf.undo(mark)
        dfs(i + 1)

    dfs(len(prefix))
    return best[0], best[1], nodes


def _split(depth: int) -> list[tuple[bool, ...]]:
    # include-before-exclude, matching the sequential search order
    return [tuple(bits) for bits in product((True, False), repeat=depth)]


def max_edges_odd_free(n: int, jobs: int = 1) -> SearchReport:
    """Largest 3-graph on n labelled vertices with no pseudocycle of length not divisible by 3.

    Depth-first over triples in lexicographic order, adding before skipping;
    a triple that creates an odd pseudocycle is never added (supersets keep
    it). The witness is the first optimum met in that order, which is the
    optimum with the lexicographically smallest sorted edge list.
    """
    if not 0 <= n <= MAX_EDGES_N:
        raise ValueError(f"exhaustive edge search supports n <= {MAX_EDGES_N}, got {n}")
    depth = min(comb(n, 3), 4) if jobs > 1 else 0
    prefixes = _split(depth)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_odd_free_search, [n] * len(prefixes), prefixes))
    else:
        results = [_odd_free_search(n, p) for p in prefixes]
    value = max(r[0] for r in results)
    witness = next(r[1] for r in results if r[0] == value)
    nodes = sum(r[2] for r in results)
    return SearchReport(n, "max_edges_odd_free", value,
                        Hypergraph3(n, frozenset(map(tuple, witness))), nodes=nodes)


def _cherry_indicator_terms(n: int):
    pairs = list(combinations(range(n), 2))
    idx = {p: i for i, p in enumerate(pairs)}
    terms = []
    for x in range(n):
        for y, z in combinations([v for v in range(n) if v != x], 2):
            # code 1: red from the smaller endpoint; code 2: from the larger
            cxy = 1 if x < y else 2
            cxz = 1 if x < z else 2
            terms.append((idx[(min(x, y), max(x, y))], cxy,
                          idx[(min(x, z), max(x, z))], cxz, idx[(y, z)]))
    return pairs, terms


def _cherry_chunk(n: int, start: int, stop: int) -> tuple[int, int, int]:
    pairs, terms = _cherry_indicator_terms(n)
    codes = np.arange(start, stop, dtype=np.int64)
    digits = np.empty((len(codes), len(pairs)), dtype=np.int8)
    for i in range(len(pairs)):
        digits[:, i] = codes % 3
        codes //= 3
    total = np.zeros(len(digits), dtype=np.int64)
    for a, ca, b, cb, c in terms:
        total += (digits[:, a] == ca) & (digits[:, b] == cb) & (digits[:, c] == 0)
    if len(total) == 0:
        return -1, -1, 0
    best = int(total.max())
    return best, start + int(np.argmax(total)), int((total == best).sum())


def _decode_colouring(n: int, code: int) -> ColouredGraph:
    arcs = []
    for u, v in combinations(range(n), 2):
        d = code % 3
        code //= 3
        if d == 1:
            arcs.append((u, v))
        elif d == 2:
            arcs.append((v, u))
    return ColouredGraph.from_arcs(n, arcs)


def max_cherries(n: int, jobs: int = 1) -> SearchReport:
    """Most cherries over all 3^C(n,2) colourings of K_n; witness has the smallest code."""
    if not 1 <= n <= MAX_CHERRIES_N:
        raise ValueError(f"exhaustive colouring search supports 1 <= n <= {MAX_CHERRIES_N}, got {n}")
    total = 3 ** comb(n, 2)
    bounds = np.linspace(0, total, max(jobs, 1) + 1, dtype=np.int64).tolist()
    chunks = [(n, a, b) for a, b in zip(bounds, bounds[1:]) if b > a]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_cherry_chunk, *zip(*chunks)))
    else:
        results = [_cherry_chunk(*c) for c in chunks]
    value = max(r[0] for r in results)
    code = min(r[1] for r in results if r[0] == value)
    count = sum(r[2] for r in results if r[0] == value)
    return SearchReport(n, "max_cherries", value, _decode_colouring(n, code),
                        count=count, nodes=total)


def _step(states: np.ndarray, E: np.ndarray) -> np.ndarray:
    """Last-two-vertex states after appending one vertex; leading axes are batch axes."""
    return (states[..., :, :, None] & E).any(axis=-3)


def shortest_odd_bruteforce(H: Hypergraph3, lmax: int = 15, with_witness: bool = False):
    """Shortest length L <= lmax, 3 not dividing L, of a closed tight sequence.

    For every start pair the set of reachable last-two-vertex states is
    advanced one appended vertex at a time; a pseudocycle of length L from
    ``(a, b)`` exists iff ``(a, b)`` is a state after L steps.
    """
    if lmax > 15 or H.n > 8:
        raise ValueError("brute force limited to lmax <= 15 and n <= 8")
    n = H.n
    if n < 3 or not H.edges:
        return (None, None) if with_witness else None
    E = H.edge_tensor()
    starts = [(a, b) for a in range(n) for b in range(n) if E[a, b].any()]
    layers = np.zeros((lmax + 1, len(starts), n, n), dtype=bool)
    for s, (a, b) in enumerate(starts):
        layers[0, s, a, b] = True
    found = None
    for L in range(1, lmax + 1):
        layers[L] = _step(layers[L - 1], E)
        if L % 3:
            hits = [s for s, (a, b) in enumerate(starts) if layers[L, s, a, b]]
            if hits:
                found = (L, hits[0])
                break
    if found is None:
        return (None, None) if with_witness else None
    L, s = found
    if not with_witness:
        return L
    a, b = starts[s]
    # walk back from the closing state (a, b); the first vertex of the state
    # after t steps is v_{t+1}
    firsts = []
    y, z = a, b
    for step in range(L, 0, -1):
        x = next(x for x in range(n) if layers[step - 1, s, x, y] and E[x, y, z])
        firsts.append(x)
        y, z = x, y
    return L, tuple(reversed(firsts))


def count_pseudocycles(H: Hypergraph3, length: int) -> int:
    """Number of labelled vertex sequences of the given length that close up tightly."""
    if H.n > 6 or length > 9:
        raise ValueError("enumeration limited to n <= 6 and length <= 9")
    if length < 3:
        raise ValueError("pseudocycles have length at least 3")
    n = H.n
    if n < 3 or not H.edges:
        return 0
    E = H.edge_tensor()
    seqs = np.array([(a, b) for a in range(n) for b in range(n) if a != b], dtype=np.int64)
    for _ in range(length - 2):
        rows = np.repeat(seqs, n, axis=0)
        nxt = np.tile(np.arange(n), len(seqs))
        keep = E[rows[:, -2], rows[:, -1], nxt]
        seqs = np.column_stack([rows[keep], nxt[keep]])
        if len(seqs) == 0:
            return 0
    closing = E[seqs[:, -2], seqs[:, -1], seqs[:, 0]] & E[seqs[:, -1], seqs[:, 0], seqs[:, 1]]
    return int(closing.sum())


def diameter_bruteforce(H: Hypergraph3, max_order: int | None = None) -> int:
    """Diameter from layered reachability, without any visited-set search.

    Every ordered shadow pair is advanced in parallel for up to ``max_order - 2``
    appended vertices (default: number of ordered pairs, enough for any
    shortest pseudopath); the answer is the largest first-hit order.
    """
    n = H.n
    if not H.edges:
        return 2
    E = H.edge_tensor()
    starts = [(a, b) for a in range(n) for b in range(n) if E[a, b].any()]
    steps = (max_order - 2) if max_order is not None else len(starts)
    state = np.zeros((len(starts), n, n), dtype=bool)
    for s, (a, b) in enumerate(starts):
        state[s, a, b] = True
    seen = state.copy()
    worst = 0
    for L in range(1, steps + 1):
        state = _step(state, E)
        new = state & ~seen
        if new.any():
            worst = L
            seen |= new
    return worst + 2


def random_hypergraph(n: int, p: float, rng: np.random.Generator) -> Hypergraph3:
    triples = list(combinations(range(n), 3))
    keep = rng.random(len(triples)) < p
    return Hypergraph3(n, frozenset(t for t, k in zip(triples, keep) if k))


def random_colouring(n: int, rng: np.random.Generator, p_blue: float = 1 / 3) -> ColouredGraph:
    red = np.zeros((n, n), dtype=bool)
    for u, v in combinations(range(n), 2):
        r = rng.random()
        if r < p_blue:
            continue
        if r < p_blue + (1 - p_blue) / 2:
            red[u, v] = True
        else:
            red[v, u] = True
    return ColouredGraph(red)

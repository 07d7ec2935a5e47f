"""Tight walks as walks on the digraph of ordered shadow pairs.

A pseudopath ``v1 v2 ... vk`` is the same thing as a walk
``(v1,v2) -> (v2,v3) -> ... -> (v_{k-1},v_k)`` in the pair digraph, where
``(x,y) -> (y,z)`` is an arc whenever ``xyz`` is an edge. A pseudocycle of
length L is a closed walk of length L. Everything mod 3 lives here: residue
reachability, shortest odd closed walks, diameter, trimming and the
reversal/extension tricks on sequences.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .hypergraph import Hypergraph3, Pair, codegrees

Node = Pair


@dataclass(frozen=True)
class PairDigraph:
    nodes: tuple[Node, ...]
    succ: dict[Node, tuple[Node, ...]]

    def index(self) -> dict[Node, int]:
        return {p: i for i, p in enumerate(self.nodes)}

    def arcs(self) -> list[tuple[Node, Node]]:
        return [(p, q) for p in self.nodes for q in self.succ[p]]

    def adjacency_matrix(self) -> np.ndarray:
        idx = self.index()
        a = np.zeros((len(self.nodes), len(self.nodes)), dtype=np.int64)
        for p, q in self.arcs():
            a[idx[p], idx[q]] = 1
        return a


@dataclass(frozen=True)
class CycleWitness:
    """A cyclic vertex sequence; validity is checked with :func:`is_pseudocycle`."""

    seq: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "seq", tuple(int(v) for v in self.seq))

    def __len__(self) -> int:
        return len(self.seq)

    def __iter__(self):
        return iter(self.seq)


class Diameter(NamedTuple):
    value: int
    vacuous: bool


def build_pair_digraph(H: Hypergraph3) -> PairDigraph:
    succ: dict[Node, set[Node]] = {}
    for e in H.edges:
        for x in e:
            for y in e:
                if y == x:
                    continue
                (z,) = (w for w in e if w != x and w != y)
                succ.setdefault((x, y), set()).add((y, z))
    nodes = tuple(sorted(succ))
    return PairDigraph(nodes, {p: tuple(sorted(succ[p])) for p in nodes})


def _windows_ok(H: Hypergraph3, seq: Sequence[int], cyclic: bool) -> bool:
    L = len(seq)
    stop = L if cyclic else L - 2
    for i in range(stop):
        a, b, c = seq[i], seq[(i + 1) % L], seq[(i + 2) % L]
        if len({a, b, c}) != 3 or not H.has_edge(a, b, c):
            return False
    return True


def is_pseudocycle(H: Hypergraph3, seq: Sequence[int]) -> bool:
    if len(seq) < 3:
        raise ValueError("a pseudocycle has length at least 3")
    return _windows_ok(H, seq, cyclic=True)


def is_pseudopath(H: Hypergraph3, seq: Sequence[int]) -> bool:
    """True iff every window of 3 consecutive vertices is an edge (order >= 2)."""
    if len(seq) < 2:
        raise ValueError("a pseudopath has order at least 2")
    if len(seq) == 2:
        return seq[0] != seq[1] and 0 <= min(seq) and max(seq) < H.n
    return _windows_ok(H, seq, cyclic=False)


def tilde(H: Hypergraph3, path: Sequence[int]) -> tuple[int, ...]:
    """Reverse a pseudopath ``v1..vk`` into ``v_{k-1} v_k v_{k-2} v_{k-1} ... v_1 v_2``.

    The result has order ``2k - 2`` and runs from ``(v_{k-1}, v_k)`` back to
    ``(v_1, v_2)``.
    """
    k = len(path)
    if k < 3 or not is_pseudopath(H, path):
        raise ValueError(f"{tuple(path)} is not a pseudopath of order >= 3")
    out: list[int] = []
    for i in range(k - 2, -1, -1):
        out += (path[i], path[i + 1])
    return tuple(out)


def _check_node(H: Hypergraph3, p: Node) -> None:
    x, y = p
    if x == y or not (0 <= x < H.n and 0 <= y < H.n):
        raise ValueError(f"invalid ordered pair {p}")


def _bfs(pd: PairDigraph, src: Node) -> dict[Node, Node | None]:
    parent: dict[Node, Node | None] = {src: None}
    queue = deque([src])
    while queue:
        p = queue.popleft()
        for q in pd.succ.get(p, ()):
            if q not in parent:
                parent[q] = p
                queue.append(q)
    return parent


def _walk_to_sequence(walk: list[Node]) -> tuple[int, ...]:
    return tuple(p[0] for p in walk) + (walk[-1][1],)


def shortest_pseudopath(H: Hypergraph3, src: Node, dst: Node) -> tuple[int, ...] | None:
    """Minimum-order pseudopath starting with ``src`` and ending with ``dst``."""
    _check_node(H, src)
    _check_node(H, dst)
    if src == dst:
        return tuple(src)
    pd = build_pair_digraph(H)
    parent = _bfs(pd, src)
    if dst not in parent:
        return None
    walk = [dst]
    while walk[-1] != src:
        walk.append(parent[walk[-1]])
    return _walk_to_sequence(walk[::-1])


def residue_reachability(pd: PairDigraph, base: Node) -> dict[tuple[Node, int], int]:
    """Shortest walk length from ``base`` to each (node, length mod 3) state."""
    dist = {(base, 0): 0}
    queue = deque([(base, 0)])
    while queue:
        p, r = queue.popleft()
        d = dist[(p, r)]
        for q in pd.succ.get(p, ()):
            s = (q, (r + 1) % 3)
            if s not in dist:
                dist[s] = d + 1
                queue.append(s)
    return dist


def _has_residue_conflict(pd: PairDigraph) -> bool:
    # Weak components of the pair digraph are strongly connected (reverse a
    # walk with tilde), so one search per component decides odd-freeness.
    label: dict[Node, int] = {}
    for start in pd.nodes:
        if start in label:
            continue
        label[start] = 0
        queue = deque([start])
        while queue:
            p = queue.popleft()
            for q in pd.succ[p]:
                r = (label[p] + 1) % 3
                if q not in label:
                    label[q] = r
                    queue.append(q)
                elif label[q] != r:
                    return True
    return False


def _shortest_odd_through(pd: PairDigraph, base: Node, limit: int | None) -> list[Node] | None:
    """Shortest closed walk at ``base`` with length not divisible by 3, if shorter than ``limit``."""
    parent: dict[tuple[Node, int], tuple[Node, int] | None] = {(base, 0): None}
    depth = {(base, 0): 0}
    queue = deque([(base, 0)])
    while queue:
        state = queue.popleft()
        p, r = state
        d = depth[state]
        if limit is not None and d + 1 >= limit:
            return None
        for q in pd.succ[p]:
            nxt = (q, (r + 1) % 3)
            if nxt in parent:
                continue
            parent[nxt] = state
            depth[nxt] = d + 1
            if q == base and nxt[1] != 0:
                walk = []
                s: tuple[Node, int] | None = nxt
                while s is not None:
                    walk.append(s[0])
                    s = parent[s]
                return walk[::-1]
            queue.append(nxt)
    return None


def detect_odd_pseudocycle(H: Hypergraph3) -> CycleWitness | None:
    """A shortest pseudocycle of length not divisible by 3, or None if there is none.

    Ties are broken by the lexicographically smallest base pair, and within a
    search by visiting successors in sorted order.
    """
    pd = build_pair_digraph(H)
    if not _has_residue_conflict(pd):
        return None
    best: list[Node] | None = None
    for base in pd.nodes:
        walk = _shortest_odd_through(pd, base, None if best is None else len(best) - 1)
        if walk is not None and (best is None or len(walk) < len(best)):
            best = walk
    assert best is not None
    # walk = base, ..., base; drop the closing repeat
    return CycleWitness(tuple(p[0] for p in best[:-1]))


def closed_walk_count(pd: PairDigraph, length: int) -> int:
    """Trace of the ``length``-th power of the adjacency matrix."""
    if not pd.nodes:
        return 0
    a = pd.adjacency_matrix()
    return int(np.trace(np.linalg.matrix_power(a, length)))


def diameter(H: Hypergraph3) -> Diameter:
    """Largest minimum order of a pseudopath between two mutually reachable ordered pairs.

    Base pairs range over ordered shadow pairs; other pairs only reach
    themselves. An empty shadow gives ``Diameter(2, vacuous=True)``.
    """
    pd = build_pair_digraph(H)
    if not pd.nodes:
        return Diameter(2, True)
    worst = 0
    for p in pd.nodes:
        dist = {p: 0}
        queue = deque([p])
        while queue:
            u = queue.popleft()
            for v in pd.succ[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        worst = max(worst, max(dist.values()))
    return Diameter(worst + 2, False)


def trim_small_codegree(H: Hypergraph3, c: int) -> Hypergraph3:
    """Delete all edges through a pair of codegree in (0, c) until no such pair remains.

    Pairs are processed smallest first, one at a time, on the current hypergraph.
    """
    if c < 1:
        raise ValueError(f"threshold must be positive, got {c}")
    edges = set(H.edges)
    cod = codegrees(H)
    by_pair: dict[Pair, set] = {}
    for e in edges:
        a, b, cc = e
        for p in ((a, b), (a, cc), (b, cc)):
            by_pair.setdefault(p, set()).add(e)
    while True:
        bad = sorted(p for p, k in cod.items() if 0 < k < c)
        if not bad:
            break
        p = bad[0]
        for e in list(by_pair[p]):
            edges.discard(e)
            a, b, cc = e
            for q in ((a, b), (a, cc), (b, cc)):
                by_pair[q].discard(e)
                cod[q] -= 1
                if cod[q] == 0:
                    del cod[q]
    return Hypergraph3(H.n, frozenset(edges))


def extend_pseudocycle(seq: Sequence[int], m: int) -> CycleWitness:
    """Stretch a pseudocycle of length L to length m.

    If m = L (mod 3) the result is ``(v1 v2 v3)^((m-L)/3) v1..vL``; otherwise,
    when m = 2L (mod 3), it is ``(v1 v2 v3)^((m-2L)/3) (v1..vL)^2``.
    """
    seq = tuple(seq)
    L = len(seq)
    if L < 3:
        raise ValueError("a pseudocycle has length at least 3")
    head = seq[:3]
    if (m - L) % 3 == 0 and m >= L:
        return CycleWitness(head * ((m - L) // 3) + seq)
    if (m - 2 * L) % 3 == 0 and m >= 2 * L:
        return CycleWitness(head * ((m - 2 * L) // 3) + seq * 2)
    raise ValueError(f"cannot extend a length-{L} pseudocycle to length {m}")

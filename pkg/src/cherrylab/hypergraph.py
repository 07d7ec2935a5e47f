"""Core data model: 3-uniform hypergraphs and coloured complete graphs.

Vertices are dense integers ``0..n-1``. Edges are stored as sorted triples,
coloured-graph pairs are keyed by ``(min, max)`` with the orientation given as
the ``from`` endpoint. Everything here is immutable; operations return new
objects.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

import numpy as np

Edge = tuple[int, int, int]
Pair = tuple[int, int]


def _pair(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Hypergraph3:
    """A 3-uniform hypergraph on vertices ``0..n-1``.

    ``edges`` may be given as any iterable of 3-element iterables; they are
    canonicalised to a frozenset of sorted triples.
    """

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        raw = list(self.edges)
        canon = set()
        for e in raw:
            t = tuple(sorted(int(v) for v in e))
            if len(t) != 3 or len(set(t)) != 3:
                raise ValueError(f"edge {tuple(e)} is not a 3-set")
            if t[0] < 0 or t[2] >= self.n:
                raise ValueError(f"edge {t} has a vertex outside [0, {self.n})")
            if t in canon:
                raise ValueError(f"duplicate edge {t}")
            canon.add(t)
        object.__setattr__(self, "edges", frozenset(canon))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Hypergraph3":
        return cls(n, frozenset(tuple(e) for e in edges))

    @classmethod
    def complete(cls, n: int) -> "Hypergraph3":
        return cls(n, frozenset(combinations(range(n), 3)))

    @classmethod
    def tight_cycle(cls, length: int) -> "Hypergraph3":
        """The tight cycle on ``length >= 4`` vertices: edges {i, i+1, i+2} mod length."""
        if length < 4:
            raise ValueError("a tight cycle needs at least 4 vertices")
        return cls(length, frozenset(
            tuple(sorted((i, (i + 1) % length, (i + 2) % length))) for i in range(length)
        ))

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, a: int, b: int, c: int) -> bool:
        return tuple(sorted((a, b, c))) in self.edges

    def degree(self, v: int) -> int:
        _check_vertex(self.n, v)
        return sum(1 for e in self.edges if v in e)

    def edge_tensor(self) -> np.ndarray:
        """Boolean ``n x n x n`` array, True at every ordering of every edge."""
        t = np.zeros((self.n, self.n, self.n), dtype=bool)
        for a, b, c in self.edges:
            for x, y, z in ((a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)):
                t[x, y, z] = True
        return t


def _check_vertex(n: int, v: int) -> None:
    if not 0 <= v < n:
        raise ValueError(f"vertex {v} outside [0, {n})")


class ColouredGraph:
    """A complete graph whose pairs are blue or red with an orientation.

    Stored as a boolean matrix ``red`` with ``red[u, v]`` True iff the pair
    ``uv`` is red and directed from ``u`` to ``v``. A pair is blue iff neither
    direction is red. The matrix is read-only.
    """

    __slots__ = ("_red",)

    def __init__(self, red: np.ndarray) -> None:
        red = np.array(red, dtype=bool, copy=True)
        if red.ndim != 2 or red.shape[0] != red.shape[1]:
            raise ValueError("red matrix must be square")
        if red.diagonal().any():
            raise ValueError("self-pairs cannot be red")
        if (red & red.T).any():
            raise ValueError("a pair cannot be red in both directions")
        red.setflags(write=False)
        self._red = red

    @classmethod
    def all_blue(cls, n: int) -> "ColouredGraph":
        return cls(np.zeros((n, n), dtype=bool))

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Pair]) -> "ColouredGraph":
        """Red arcs ``(from, to)``; every other pair is blue."""
        red = np.zeros((n, n), dtype=bool)
        for u, v in arcs:
            _check_vertex(n, u)
            _check_vertex(n, v)
            if u == v:
                raise ValueError(f"self-pair ({u}, {v})")
            red[u, v] = True
        return cls(red)

    @classmethod
    def from_colours(cls, n: int, colours: Mapping[Pair, int | None]) -> "ColouredGraph":
        """Build from a total map ``{(u, v): from_vertex or None}`` over all pairs."""
        red = np.zeros((n, n), dtype=bool)
        seen = set()
        for (u, v), src in colours.items():
            _check_vertex(n, u)
            _check_vertex(n, v)
            if u == v:
                raise ValueError(f"self-pair ({u}, {v})")
            key = _pair(u, v)
            if key in seen:
                raise ValueError(f"pair {key} coloured twice")
            seen.add(key)
            if src is None:
                continue
            if src not in key:
                raise ValueError(f"red pair {key} oriented from non-endpoint {src}")
            red[src, v if src == u else u] = True
        missing = n * (n - 1) // 2 - len(seen)
        if missing:
            raise ValueError(f"{missing} pairs have no colour")
        return cls(red)

    @property
    def n(self) -> int:
        return self._red.shape[0]

    @property
    def red(self) -> np.ndarray:
        return self._red

    def blue_matrix(self) -> np.ndarray:
        b = ~(self._red | self._red.T)
        np.fill_diagonal(b, False)
        return b

    def red_from(self, u: int, v: int) -> int | None:
        """The ``from`` endpoint if ``uv`` is red, else None (blue)."""
        _check_vertex(self.n, u)
        _check_vertex(self.n, v)
        if u == v:
            raise ValueError("self-pair has no colour")
        if self._red[u, v]:
            return u
        if self._red[v, u]:
            return v
        return None

    def is_blue(self, u: int, v: int) -> bool:
        return self.red_from(u, v) is None

    def out_neighbours(self, x: int) -> list[int]:
        return np.flatnonzero(self._red[x]).tolist()

    def in_neighbours(self, x: int) -> list[int]:
        return np.flatnonzero(self._red[:, x]).tolist()

    def colours(self) -> dict[Pair, int | None]:
        return {(u, v): self.red_from(u, v) for u, v in combinations(range(self.n), 2)}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColouredGraph):
            return NotImplemented
        return np.array_equal(self._red, other._red)

    def __hash__(self) -> int:
        return hash((self.n, self._red.tobytes()))

    def __repr__(self) -> str:
        return f"ColouredGraph(n={self.n}, red_arcs={int(self._red.sum())})"


def shadow(H: Hypergraph3) -> frozenset[Pair]:
    """Pairs covered by at least one edge."""
    return frozenset(p for a, b, c in H.edges for p in ((a, b), (a, c), (b, c)))


def codegree(H: Hypergraph3, u: int, v: int) -> int:
    _check_vertex(H.n, u)
    _check_vertex(H.n, v)
    if u == v:
        raise ValueError("codegree needs two distinct vertices")
    return sum(1 for e in H.edges if u in e and v in e)


def codegrees(H: Hypergraph3) -> Counter[Pair]:
    """Codegree of every shadow pair (pairs of codegree 0 are absent)."""
    cnt: Counter[Pair] = Counter()
    for a, b, c in H.edges:
        cnt[(a, b)] += 1
        cnt[(a, c)] += 1
        cnt[(b, c)] += 1
    return cnt


def link(H: Hypergraph3, v: int) -> frozenset[Pair]:
    """The link graph of ``v``: pairs ``uw`` with ``uvw`` an edge."""
    _check_vertex(H.n, v)
    return frozenset(tuple(x for x in e if x != v) for e in H.edges if v in e)


def blow_up(H: Hypergraph3, t: int) -> Hypergraph3:
    """The t-blow-up; copy ``i`` of vertex ``x`` gets index ``x*t + i``."""
    if t < 1:
        raise ValueError(f"blow-up factor must be positive, got {t}")
    edges = set()
    for a, b, c in H.edges:
        for i in range(t):
            for j in range(t):
                for k in range(t):
                    edges.add(tuple(sorted((a * t + i, b * t + j, c * t + k))))
    return Hypergraph3(H.n * t, frozenset(edges))


def vertex_replace(H: Hypergraph3, u: int, v: int) -> Hypergraph3:
    """Drop every edge through ``v``, then add ``e - u + v`` for each edge e through u but not v."""
    _check_vertex(H.n, u)
    _check_vertex(H.n, v)
    if u == v:
        raise ValueError("vertex_replace needs u != v")
    kept = {e for e in H.edges if v not in e}
    for e in H.edges:
        if u in e and v not in e:
            kept.add(tuple(sorted(v if x == u else x for x in e)))
    return Hypergraph3(H.n, frozenset(kept))


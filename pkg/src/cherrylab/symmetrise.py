"""Symmetrisation: growing full blue clone-cliques without losing cherries.

A blue clone-clique Q is a blue clique that every outside vertex sees
uniformly (all blue, or all red with one orientation); it is *full* when all
those outside edges are red. :func:`symmetrise_from` grows such a set around
a vertex by repeatedly cloning either the newest or the first member onto the
whole set, whichever the gain rule prefers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .extremal import profile_value
from .hypergraph import ColouredGraph

Selector = Callable[[Sequence[int]], int]


def first_index() -> Selector:
    return lambda candidates: min(candidates)


def seeded_random(seed: int) -> Selector:
    rng = random.Random(seed)
    return lambda candidates: rng.choice(sorted(candidates))


def prefer_set(target: Iterable[int]) -> Selector:
    """Pick the smallest candidate inside ``target`` while one exists."""
    target = frozenset(target)

    def pick(candidates: Sequence[int]) -> int:
        inside = [v for v in candidates if v in target]
        return min(inside) if inside else min(candidates)

    return pick


@dataclass(frozen=True)
class Step:
    """One growth step from k members to k + 1."""

    k: int
    added: int  # x_{k+1}
    gain_new: int  # c(G_{k+1}(x_{k+1})) - c(G_k)
    gain_first: int  # c(G_{k+1}(x_1)) - c(G_k)
    cloned: int  # y_{k+1}
    sym_diff: int  # |N^-(x_1) symmetric difference N^-(x_{k+1})| in G_k
    cherries: int  # c(G_{k+1})

    def as_dict(self) -> dict:
        return dict(k=self.k, added=self.added, gain_new=self.gain_new,
                    gain_first=self.gain_first, cloned=self.cloned,
                    sym_diff=self.sym_diff, cherries=self.cherries)


@dataclass(frozen=True)
class Trace:
    start: int
    initial_cherries: int
    steps: tuple[Step, ...]

    def cherry_sequence(self) -> list[int]:
        return [self.initial_cherries] + [s.cherries for s in self.steps]


@dataclass(frozen=True)
class ClonePartition:
    """Blocks ordered by non-increasing size (ties by smallest vertex)."""

    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]]) -> "ClonePartition":
        bl = [tuple(sorted(b)) for b in blocks]
        bl.sort(key=lambda b: (-len(b), b))
        return cls(tuple(bl))

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)


def _blue(red: np.ndarray) -> np.ndarray:
    b = ~(red | red.T)
    np.fill_diagonal(b, False)
    return b


def is_blue_clone_clique(G: ColouredGraph, Q: Iterable[int]) -> bool:
    return _clone_clique_kind(G, Q) is not None


def is_full_blue_clone_clique(G: ColouredGraph, Q: Iterable[int]) -> bool:
    return _clone_clique_kind(G, Q) == "full"


def _clone_clique_kind(G: ColouredGraph, Q: Iterable[int]) -> str | None:
    q = sorted(set(Q))
    if not q:
        raise ValueError("clone-clique candidate must be non-empty")
    red = G.red
    if red[np.ix_(q, q)].any():
        return None
    outside = np.setdiff1d(np.arange(G.n), q)
    out_arcs = red[np.ix_(outside, q)]  # outside -> Q
    in_arcs = red[np.ix_(q, outside)].T  # Q -> outside
    to_q = out_arcs.all(axis=1)
    from_q = in_arcs.all(axis=1)
    blue = ~(out_arcs.any(axis=1) | in_arcs.any(axis=1))
    if not (to_q | from_q | blue).all():
        return None
    return "full" if not blue.any() else "partial"


def clone_graph(G: ColouredGraph, S: Iterable[int], y: int) -> ColouredGraph:
    """Give every vertex of S the colours of y towards V - S and make S a blue clique."""
    S = sorted(set(S))
    if len(S) < 2 or y not in S:
        raise ValueError("clone_graph needs |S| >= 2 and y in S")
    return ColouredGraph(_cloned(G.red, S, y))


def _cloned(red: np.ndarray, S: Sequence[int], y: int) -> np.ndarray:
    out = np.array(red, copy=True)
    mask = np.zeros(red.shape[0], dtype=bool)
    mask[list(S)] = True
    rest = ~mask
    out[np.ix_(mask, rest)] = red[y, rest]
    out[np.ix_(rest, mask)] = red[rest, y][:, None]
    out[np.ix_(mask, mask)] = False
    return out


def _cherries_touching(red: np.ndarray, S: Sequence[int]) -> int:
    """Cherries with at least one vertex in S, in O(n^2 |S|)."""
    r = red.astype(np.int64)
    b = _blue(red).astype(np.int64)
    S = list(S)
    in_s = np.zeros(red.shape[0], dtype=bool)
    in_s[S] = True
    # apex in S
    rs = r[S]
    apex_in = int(((rs @ b) * rs).sum()) // 2
    # apex outside S, some leaf in S: ordered (leaf in S, other leaf) minus
    # half the ordered pairs with both leaves in S
    ro = r[~in_s]
    ros = ro[:, S]
    one = int(((ros @ b[S]) * ro).sum())
    both = int(((ros @ b[np.ix_(S, S)]) * ros).sum())
    return apex_in + one - both // 2


def _full_count(red: np.ndarray) -> int:
    r = red.astype(np.int64)
    return int(((r @ _blue(red).astype(np.int64)) * r).sum()) // 2


def symmetrise_from(G: ColouredGraph, x: int, selector: Selector | None = None
                    ) -> tuple[ColouredGraph, tuple[int, ...], Trace]:
    """Grow a full blue clone-clique around ``x``; returns ``(G', Q, trace)``.

    While some outside vertex has blue edges to the current set
    ``{x_1..x_k}``, pick one as ``x_{k+1}`` (via ``selector``) and clone onto
    ``{x_1..x_{k+1}}`` either ``x_{k+1}`` (if its gain is at least k times the
    gain of cloning ``x_1``) or ``x_1``.
    """
    if not 0 <= x < G.n:
        raise ValueError(f"vertex {x} outside [0, {G.n})")
    selector = selector or first_index()
    red = np.array(G.red, copy=True)
    members = [x]
    c = _full_count(red)
    c0 = c
    steps = []
    while True:
        blue_to_x1 = _blue(red)[x]
        in_set = np.zeros(G.n, dtype=bool)
        in_set[members] = True
        # members form a clone-clique, so an edge to x_1 decides all of them
        candidates = np.flatnonzero(blue_to_x1 & ~in_set).tolist()
        if not candidates:
            break
        new = selector(candidates)
        if new not in candidates:
            raise ValueError(f"selector returned non-candidate {new}")
        k = len(members)
        S = members + [new]
        before = _cherries_touching(red, S)
        g_new = _cherries_touching(_cloned(red, S, new), S) - before
        g_first = _cherries_touching(_cloned(red, S, x), S) - before
        y = new if g_new >= k * g_first else x
        sym = int((red[:, x] ^ red[:, new]).sum())
        red = _cloned(red, S, y)
        c += g_new if y == new else g_first
        members = S
        steps.append(Step(k, new, g_new, g_first, y, sym, c))
    return ColouredGraph(red), tuple(sorted(members)), Trace(x, c0, tuple(steps))


def clone_block_of(G: ColouredGraph, x: int) -> tuple[int, ...] | None:
    """The full blue clone-clique containing x, if x lies in one."""
    q = [x] + [v for v in range(G.n) if v != x and G.is_blue(x, v)]
    return tuple(sorted(q)) if is_full_blue_clone_clique(G, q) else None


def full_symmetrise(G: ColouredGraph, selector: Selector | None = None
                    ) -> tuple[ColouredGraph, ClonePartition, list[Trace]]:
    """Symmetrise from the smallest uncovered vertex until every vertex lies in a full blue clone-clique."""
    traces = []
    for _ in range(G.n + 1):
        uncovered = [v for v in range(G.n) if clone_block_of(G, v) is None]
        if not uncovered:
            break
        G, _, trace = symmetrise_from(G, uncovered[0], selector)
        traces.append(trace)
    else:
        raise RuntimeError("symmetrisation did not terminate")
    seen: set[int] = set()
    blocks = []
    for v in range(G.n):
        if v not in seen:
            b = clone_block_of(G, v)
            seen.update(b)
            blocks.append(b)
    return G, ClonePartition.from_blocks(blocks), traces


def reorient_to_larger(G: ColouredGraph, partition: ClonePartition) -> ColouredGraph:
    """Point every red edge between two blocks towards the earlier (larger) block."""
    cover = sorted(v for b in partition.blocks for v in b)
    if cover != list(range(G.n)):
        raise ValueError("partition does not cover the vertex set exactly once")
    for b in partition.blocks:
        if not is_full_blue_clone_clique(G, b):
            raise ValueError(f"block {b} is not a full blue clone-clique")
    red = np.zeros_like(G.red)
    bl = partition.blocks
    for i, bi in enumerate(bl):
        for bj in bl[i + 1:]:
            red[np.ix_(bj, bi)] = True
    return ColouredGraph(red)


def partition_cherries(partition: ClonePartition) -> int:
    """Cherries after reorientation: sum over i < j of C(q_i, 2) q_j."""
    return profile_value(partition.sizes)


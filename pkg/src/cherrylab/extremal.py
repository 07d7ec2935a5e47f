"""The extremal count f(n), its maximising profiles and the iterated blow-up.

f(1) = 0 and f(n) = max_k C(k,2)(n-k) + f(n-k) over k in [n-1]. All integer
work is exact; floats appear only in the limiting constants and ``g``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

import numpy as np

from .hypergraph import Hypergraph3

BETA = (3 - math.sqrt(3)) / 2
ALPHA = math.sqrt(3) / 3 - 0.5
DENSITY = 2 * math.sqrt(3) - 3  # = 6 * ALPHA


@dataclass(frozen=True)
class FTable:
    """``f[n]`` and the smallest maximising first part ``k[n]`` for n = 1..N.

    Index 0 is a placeholder (f[0] = 0, k[0] = 0).
    """

    f: np.ndarray
    k: np.ndarray

    @property
    def N(self) -> int:
        return len(self.f) - 1

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.N:
            raise IndexError(f"n={n} outside table range 1..{self.N}")
        return int(self.f[n])


def f_table(N: int) -> FTable:
    if N < 1:
        raise ValueError(f"table size must be positive, got {N}")
    f = np.zeros(N + 1, dtype=np.int64)
    k = np.zeros(N + 1, dtype=np.int64)
    for n in range(2, N + 1):
        ks = np.arange(1, n, dtype=np.int64)
        vals = ks * (ks - 1) // 2 * (n - ks) + f[n - ks]
        j = int(np.argmax(vals))  # first maximiser = smallest k
        f[n] = vals[j]
        k[n] = j + 1
    f.setflags(write=False)
    k.setflags(write=False)
    return FTable(f, k)


def profile_value(parts: Sequence[int]) -> int:
    """Sum over i < j of C(x_i, 2) * x_j."""
    total, suffix = 0, 0
    for x in reversed(parts):
        total += math.comb(x, 2) * suffix
        suffix += x
    return total


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Integer partitions of n as non-increasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def f_by_partitions(n: int) -> int:
    """Exhaustive maximum of :func:`profile_value` over partitions of n (n <= 45)."""
    if not 1 <= n <= 45:
        raise ValueError(f"exhaustive partition search needs 1 <= n <= 45, got {n}")
    return max(profile_value(p) for p in partitions(n))


def optimal_profile(n: int, table: FTable | None = None) -> tuple[int, ...]:
    """Follow the smallest argmax k(n), k(n - k(n)), ... down the table.

    A remainder of size at most 2 becomes a single trailing part; such parts
    contribute nothing of their own, so the value is unchanged.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if table is None or table.N < n:
        table = f_table(n)
    parts = []
    m = n
    while m > 2:
        k = int(table.k[m])
        parts.append(k)
        m -= k
    if m:
        parts.append(m)
    return tuple(parts)


def check_profile(parts: Sequence[int]) -> None:
    if not parts:
        raise ValueError("a profile needs at least one part")
    if any(x < 1 for x in parts):
        raise ValueError(f"profile {tuple(parts)} has a non-positive part")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"profile {tuple(parts)} is not non-increasing")


def blocks(parts: Sequence[int]) -> list[range]:
    """Consecutive vertex blocks, part 1 first."""
    out, start = [], 0
    for x in parts:
        out.append(range(start, start + x))
        start += x
    return out


def construct_iterated(parts: Sequence[int]) -> Hypergraph3:
    """Edges: two vertices in part i and one vertex in any later part."""
    check_profile(parts)
    bl = blocks(parts)
    n = sum(parts)
    edges = []
    for i, b in enumerate(bl):
        later = range(b.stop, n)
        for x, y in combinations(b, 2):
            edges.extend((x, y, z) for z in later)
    return Hypergraph3(n, frozenset(edges))


def g_eval(x: float) -> float:
    """``x(1-x) / (2(3 - 3x + x^2))`` on [0, 1]; its maximum ALPHA sits at BETA."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"g is defined on [0, 1], got {x}")
    return x * (1 - x) / (2 * (3 - 3 * x + x * x))


def below_alpha_n3(f: int, n: int) -> bool:
    """Exact test of ``f <= ALPHA * n**3`` with ALPHA = sqrt(3)/3 - 1/2.

    Equivalent to 3 (2f + n^3)^2 <= 4 n^6, both sides non-negative.
    """
    lhs = 2 * f + n**3
    return 3 * lhs * lhs <= 4 * n**6

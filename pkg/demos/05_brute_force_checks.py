"""
Brute-force ground truth
========================

Small exhaustive searches confirm the exact statements: the most edges of a
3-graph without odd pseudocycles, and the most cherries in a coloured K_n,
both equal f(n).
"""

import time

import numpy as np

from cherrylab.extremal import f_table
from cherrylab.oracle import (count_pseudocycles, max_cherries, max_edges_odd_free, random_hypergraph,
                              shortest_odd_bruteforce)
from cherrylab.pairwalk import build_pair_digraph, closed_walk_count, detect_odd_pseudocycle

table = f_table(6)
for n in range(3, 7):
    t0 = time.perf_counter()
    rep = max_edges_odd_free(n)
    print(f"n={n}: max odd-free edges {rep.value} (f = {table[n]}), {rep.nodes} nodes, "
          f"{time.perf_counter() - t0:.2f}s")
    print("   witness:", rep.witness.sorted_edges())

for n in range(3, 6):
    rep = max_cherries(n)
    print(f"n={n}: max cherries {rep.value}, {rep.count} optimal colourings of {rep.nodes}")

# Walk counts two ways, and detector minimality against layered enumeration.
rng = np.random.default_rng(3)
for _ in range(5):
    H = random_hypergraph(6, 0.3, rng)
    pd = build_pair_digraph(H)
    counts = [(count_pseudocycles(H, L), closed_walk_count(pd, L)) for L in range(3, 8)]
    w = detect_odd_pseudocycle(H)
    print(H.m, "edges:", counts, "| odd:", None if w is None else len(w), shortest_odd_bruteforce(H))

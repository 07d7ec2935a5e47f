"""
Hypergraphs, pair digraphs and odd pseudocycles
===============================================

A tight walk in a 3-graph is a walk on ordered pairs: from (x, y) you may
step to (y, z) whenever xyz is an edge. Closed walks whose length is not a
multiple of 3 are the obstructions studied throughout the package.
"""

from cherrylab.hypergraph import Hypergraph3, blow_up, shadow
from cherrylab.pairwalk import (build_pair_digraph, detect_odd_pseudocycle, diameter,
                                extend_pseudocycle, is_pseudocycle, tilde)

# The tight 5-cycle: edges {i, i+1, i+2} mod 5.
C5 = Hypergraph3.tight_cycle(5)
print("edges of C5:", C5.sorted_edges())
print("shadow size:", len(shadow(C5)))

pd = build_pair_digraph(C5)
print("pair digraph:", len(pd.nodes), "nodes,", len(pd.arcs()), "arcs")

# The cycle itself has length 5, which is not divisible by 3.
w = detect_odd_pseudocycle(C5)
print("shortest odd pseudocycle:", w.seq)

# Repeating the first three vertices or doubling the cycle reaches many more lengths.
for m in (8, 10, 11, 13):
    ext = extend_pseudocycle(w.seq, m)
    print(f"length {m}:", ext.seq, is_pseudocycle(C5, ext.seq))

# A single edge only carries closed walks of length 0 mod 3.
edge = Hypergraph3.from_edges(3, [(0, 1, 2)])
print("single edge odd cycle:", detect_odd_pseudocycle(edge))
print("single edge diameter:", diameter(edge))

# Reversal: tilde turns a pseudopath from (v1, v2) into one from (v_{k-1}, v_k) back to (v1, v2).
K4 = Hypergraph3.complete(4)
print("tilde of 0 1 2 3 in K4:", tilde(K4, (0, 1, 2, 3)))

# Blow-ups keep odd pseudocycles: every vertex becomes t copies.
B = blow_up(C5, 2)
print("C5 blown up twice:", B.n, "vertices,", B.m, "edges, odd cycle length",
      len(detect_odd_pseudocycle(B)))

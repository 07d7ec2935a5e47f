"""
Good colourings and cherries
============================

A cherry is a triple xyz with red arcs x->y, x->z and a blue pair yz. A good
colouring makes every edge of a 3-graph a cherry, and exists exactly when
the 3-graph has no odd pseudocycle. The construction either returns such a
colouring or a shortest odd pseudocycle as a certificate.
"""

from itertools import combinations

from cherrylab.colouring import cherries, cherry_count, construct_good_colouring, verify_good_colouring
from cherrylab.hypergraph import Hypergraph3
from cherrylab.io import serialize
from cherrylab.pairwalk import CycleWitness

C6 = Hypergraph3.tight_cycle(6)
G = construct_good_colouring(C6)
print(serialize(G))
print("good:", verify_good_colouring(C6, G))
print("apexes:", sorted({x for x, _, _ in cherries(G)}))  # every third vertex

# C5 has no good colouring; we get a certificate instead.
print("C5 ->", construct_good_colouring(Hypergraph3.tight_cycle(5)))

# A copy of K4 inside a larger hypergraph is enough to force a 4-cycle.
H = Hypergraph3.from_edges(6, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3), (3, 4, 5)])
print("K4 plus an edge ->", construct_good_colouring(H))

# Every hypergraph on 5 vertices: each edge becomes a distinct cherry, so e(H) <= c(G).
triples = list(combinations(range(5), 3))
free = 0
for mask in range(1 << 10):
    H = Hypergraph3(5, frozenset(t for i, t in enumerate(triples) if mask >> i & 1))
    res = construct_good_colouring(H)
    if not isinstance(res, CycleWitness):
        assert verify_good_colouring(H, res) and H.m <= cherry_count(res)
        free += 1
print(free, "of 1024 hypergraphs on 5 vertices have a good colouring")

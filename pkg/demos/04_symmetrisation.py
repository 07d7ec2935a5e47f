"""
Symmetrisation
==============

Starting from an arbitrary coloured K_n, symmetrisation grows full blue
clone-cliques one vertex at a time without losing cherries. Once every vertex
sits in one, pointing all red arcs towards the larger block gives a block
colouring whose cherry count is a partition value, hence at most f(n).
"""

import numpy as np

from cherrylab.colouring import cherry_count
from cherrylab.extremal import f_table
from cherrylab.oracle import random_colouring
from cherrylab.symmetrise import (full_symmetrise, partition_cherries, reorient_to_larger,
                                  seeded_random, symmetrise_from)

rng = np.random.default_rng(1)
G = random_colouring(24, rng)
print("start:", cherry_count(G), "cherries")

G1, Q, trace = symmetrise_from(G, 0)
print("clone-clique around 0:", Q)
for s in trace.steps:
    print(f"  k={s.k:2d} add {s.added:2d} gains new={s.gain_new:4d} first={s.gain_first:4d} "
          f"clone {s.cloned:2d} -> c={s.cherries}")

G2, part, traces = full_symmetrise(G, seeded_random(7))
print("block sizes:", part.sizes, "after", len(traces), "runs, c =", cherry_count(G2))
R = reorient_to_larger(G2, part)
print("reoriented:", cherry_count(R), "=", partition_cherries(part), "<= f(24) =", f_table(24)[24])

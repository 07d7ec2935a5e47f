"""
The extremal function f(n)
==========================

f(n) is the largest value of sum_{i<j} C(x_i, 2) x_j over partitions of n.
It bounds both the number of cherries in a coloured K_n and the number of
edges of a 3-graph without odd pseudocycles, and the iterated construction
attains it.
"""

import math

import numpy as np

from cherrylab.extremal import (ALPHA, BETA, DENSITY, construct_iterated, f_by_partitions, f_table,
                                g_eval, optimal_profile)
from cherrylab.pairwalk import detect_odd_pseudocycle

table = f_table(3000)
print(" n   f(n)  k(n)  profile")
for n in range(1, 13):
    print(f"{n:2d} {table[n]:6d} {int(table.k[n]):5d}  {optimal_profile(n, table)}")

assert all(table[n] == f_by_partitions(n) for n in range(1, 25))

# Densities approach 2 sqrt(3) - 3 from one side once scaled by n^3 / 6.
for n in (10, 100, 1000, 3000):
    print(f"n={n:5d}  f/C(n,3)={table[n] / math.comb(n, 3):.6f}  6f/n^3={6 * table[n] / n ** 3:.6f}")
print("limit:", DENSITY)

# The optimal first part is close to beta * n.
for n in (100, 1000, 3000):
    print(n, int(table.k[n]), round(BETA * n, 1))

# g peaks at beta with value alpha.
xs = np.linspace(0, 1, 11)
print([round(g_eval(float(x)), 4) for x in xs], "max", ALPHA)

# The construction has f(n) edges and no odd pseudocycle.
H = construct_iterated(optimal_profile(9, table))
print("H(profile of 9):", H.m, "edges; odd cycle:", detect_odd_pseudocycle(H))

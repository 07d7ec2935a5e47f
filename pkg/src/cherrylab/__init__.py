"""Tight-cycle Turán toolkit for 3-uniform hypergraphs.

Odd pseudocycle detection with witnesses, good colourings, cherry counting,
symmetrisation, the extremal function f(n) and brute-force cross-checks.
"""

__version__ = "0.1.0"

from .colouring import (cherry_count, construct_good_colouring, extremal_colouring,
                        verify_good_colouring)
from .extremal import ALPHA, BETA, DENSITY, construct_iterated, f_table, optimal_profile
from .hypergraph import ColouredGraph, Hypergraph3, blow_up, codegree, link, shadow, vertex_replace
from .pairwalk import (CycleWitness, detect_odd_pseudocycle, diameter, extend_pseudocycle,
                       is_pseudocycle, shortest_pseudopath, tilde, trim_small_codegree)
from .symmetrise import full_symmetrise, reorient_to_larger, symmetrise_from

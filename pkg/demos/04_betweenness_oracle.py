"""
Brandes betweenness against brute-force enumeration
===================================================
"""

import itertools

import numpy as np

from cascode import Graph, betweenness, brute_force_betweenness

rng = np.random.default_rng(0)
worst = 0.0
for _ in range(50):
    n = int(rng.integers(2, 13))
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.3]
    g = Graph.from_edges(n, edges)
    worst = max(worst, np.abs(betweenness(g) - brute_force_betweenness(g)).max())
print("largest disagreement over 50 graphs:", worst)

# four-cycle: each opposite pair has two shortest paths
c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
print(betweenness(c4))

"""Greedy agglomerative modularity maximisation (Clauset-Newman-Moore style).

Merge gains are tracked as exact integers: joining communities ``a`` and ``b``
changes modularity by ``(2m * e_ab - d_a * d_b) / (2 m^2)``, where ``e_ab`` is
the number of edges between them and ``d`` the summed degrees. Keeping the
numerator integral makes tie-breaking exact.
"""
from __future__ import annotations

import heapq
from typing import List, Optional

import numpy as np

from .detect import compact_labels
from .graph import Graph, GraphError


def greedy_merges(g: Graph):
    """Yield ``(a, b, gain)`` for every accepted merge, in order.

    ``a < b`` are community ids (the merged community keeps ``a``); ``gain``
    is the modularity increase as a float. Stops before the first merge whose
    gain would be <= 0. Ties on gain go to the smallest ``(a, b)``.
    """
    m = g.edge_count
    if m == 0:
        raise GraphError("modularity undefined for edgeless graph")
    two_m = 2 * m
    scale = 2.0 * m * m
    links = [dict.fromkeys(nb, 1) for nb in g.adjacency]
    deg = [len(nb) for nb in g.adjacency]
    alive = [True] * g.node_count

    heap = []
    for a, b in g.edges():
        heap.append((-(two_m - deg[a] * deg[b]), a, b))
    heapq.heapify(heap)

    while heap:
        key, a, b = heapq.heappop(heap)
        if not (alive[a] and alive[b]) or b not in links[a]:
            continue
        gain = two_m * links[a][b] - deg[a] * deg[b]
        if -key != gain:
            continue  # stale entry
        if gain <= 0:
            break
        # fold b into a
        alive[b] = False
        lb = links[b]
        la = links[a]
        del la[b]
        del lb[a]
        for c, e in lb.items():
            la[c] = la.get(c, 0) + e
            lc = links[c]
            del lc[b]
            lc[a] = la[c]
        links[b] = {}
        deg[a] += deg[b]
        for c, e in la.items():
            lo, hi = (a, c) if a < c else (c, a)
            heapq.heappush(heap, (-(two_m * e - deg[a] * deg[c]), lo, hi))
        yield a, b, gain / scale


def greedy_modularity_partition(g: Graph, history: Optional[List] = None) -> np.ndarray:
    """Partition of ``g`` at the modularity peak of greedy agglomeration.

    Starts from singletons and repeatedly performs the merge with the largest
    modularity gain until no merge gains anything.

    Parameters
    ----------
    g : Graph
        Must have at least one edge.
    history : list, optional
        If given, receives the ``(a, b, gain)`` merge sequence.

    Returns
    -------
    numpy.ndarray
        Community labels compacted to ``0..k-1``.
    """
    parent = list(range(g.node_count))
    for a, b, gain in greedy_merges(g):
        parent[b] = a
        if history is not None:
            history.append((a, b, gain))

    def root(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    return compact_labels([root(v) for v in range(g.node_count)])

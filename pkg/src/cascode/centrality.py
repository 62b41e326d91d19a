"""Shortest-path betweenness centrality.

Scores are unnormalised and count every unordered pair ``{s, t}`` once::

    c(v) = sum over s < t, s != v != t of sigma_st(v) / sigma_st

where ``sigma_st`` is the number of shortest s-t paths and ``sigma_st(v)``
the number of those passing through ``v``. Unreachable pairs add nothing.
"""
from __future__ import annotations

from collections import deque
from itertools import combinations

import numpy as np

from .graph import Graph

BRUTE_FORCE_LIMIT = 16


def _single_source(adj, s, n):
    """Dependencies of every node on source ``s`` (Brandes 2001 accumulation)."""
    dist = [-1] * n
    sigma = [0] * n
    dist[s] = 0
    sigma[s] = 1
    order = [s]
    queue = deque(order)
    pop = queue.popleft
    push = queue.append
    while queue:
        v = pop()
        dv = dist[v] + 1
        sv = sigma[v]
        for w in adj[v]:
            dw = dist[w]
            if dw < 0:
                dist[w] = dv
                sigma[w] = sv
                push(w)
                order.append(w)
            elif dw == dv:
                sigma[w] += sv
    delta = [0.0] * n
    for w in reversed(order):
        dw = dist[w] - 1
        coeff = (1.0 + delta[w]) / sigma[w]
        for v in adj[w]:
            if dist[v] == dw:
                delta[v] += sigma[v] * coeff
    return order, delta


def betweenness(g: Graph) -> np.ndarray:
    """Exact betweenness of every node by Brandes' algorithm.

    Runs one BFS per source, ``O(|V||E|)`` overall. Source contributions are
    summed in ascending source order, so results are reproducible bit for bit.

    Returns
    -------
    numpy.ndarray
        float64 array of length ``g.node_count``.
    """
    n = g.node_count
    adj = g.adjacency
    scores = [0.0] * n
    for s in range(n):
        order, delta = _single_source(adj, s, n)
        for w in order:
            if w != s:
                scores[w] += delta[w]
    # each unordered pair was visited from both ends
    return np.asarray(scores, dtype=float) / 2.0


def _bfs_distances(adj, s, n):
    dist = [-1] * n
    dist[s] = 0
    queue = deque([s])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def _all_shortest_paths(adj, s, t, dist_s):
    """Every shortest s-t path as a tuple of nodes, by explicit enumeration."""
    target = dist_s[t]
    paths = []

    def extend(path):
        v = path[-1]
        if v == t:
            paths.append(tuple(path))
            return
        for w in adj[v]:
            if dist_s[w] == len(path) and len(path) <= target:
                path.append(w)
                extend(path)
                path.pop()

    extend([s])
    return paths


def brute_force_betweenness(g: Graph) -> np.ndarray:
    """Betweenness by listing every shortest path of every pair.

    Independent of :func:`betweenness`; used only as a test oracle.

    Raises
    ------
    ValueError
        If the graph has more than 16 nodes.
    """
    n = g.node_count
    if n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force limited to {BRUTE_FORCE_LIMIT} nodes, got {n}")
    adj = g.adjacency
    scores = np.zeros(n)
    for s, t in combinations(range(n), 2):
        dist_s = _bfs_distances(adj, s, n)
        if dist_s[t] < 0:
            continue
        paths = _all_shortest_paths(adj, s, t, dist_s)
        for v in range(n):
            if v in (s, t):
                continue
            through = sum(1 for p in paths if v in p[1:-1])
            scores[v] += through / len(paths)
    return scores

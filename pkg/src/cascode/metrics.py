"""Partition quality (modularity) and agreement (normalized mutual information)."""
from __future__ import annotations

import numpy as np

from .graph import Graph, GraphError

NMI_VARIANT = "arithmetic"  # 2 I(A;B) / (H(A) + H(B)), natural log


def modularity(g: Graph, labels) -> float:
    """Newman-Girvan modularity of a hard partition.

    ``Q = sum_c [ m_c / m - (d_c / 2m)^2 ]`` with ``m_c`` the edges inside
    community ``c`` and ``d_c`` its total degree.
    """
    m = g.edge_count
    if m == 0:
        raise GraphError("modularity undefined for edgeless graph")
    labels = np.asarray(labels)
    if labels.shape != (g.node_count,):
        raise ValueError("partition must label every node")
    _, comm = np.unique(labels, return_inverse=True)
    comm = comm.ravel()
    k = comm.max() + 1
    deg = np.fromiter((len(nb) for nb in g.adjacency), dtype=np.int64, count=g.node_count)
    d_c = np.bincount(comm, weights=deg, minlength=k)
    src = np.fromiter((u for u, _ in g.edges()), dtype=np.int64, count=m)
    dst = np.fromiter((v for _, v in g.edges()), dtype=np.int64, count=m)
    inside = np.count_nonzero(comm[src] == comm[dst])
    return float(inside / m - np.sum((d_c / (2.0 * m)) ** 2))


def confusion_table(a, b) -> np.ndarray:
    """Contingency counts ``n_ij`` of two labelings of the same nodes."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape or a.ndim != 1:
        raise ValueError("partitions must cover the same node set")
    _, ia = np.unique(a, return_inverse=True)
    _, ib = np.unique(b, return_inverse=True)
    ia, ib = ia.ravel(), ib.ravel()
    table = np.zeros((ia.max() + 1, ib.max() + 1), dtype=np.int64)
    np.add.at(table, (ia, ib), 1)
    return table


def _entropy(counts, n):
    p = counts[counts > 0] / n
    return float(-np.sum(p * np.log(p)))


def nmi(a, b) -> float:
    """Normalized mutual information ``2 I(A;B) / (H(A) + H(B))``.

    Two single-block partitions score 1; a single block against anything
    else scores 0.
    """
    table = confusion_table(a, b)
    n = table.sum()
    if n == 0:
        raise ValueError("empty partitions")
    rows = table.sum(axis=1)
    cols = table.sum(axis=0)
    h_a = _entropy(rows, n)
    h_b = _entropy(cols, n)
    if h_a + h_b == 0.0:
        return 1.0
    i, j = np.nonzero(table)
    nij = table[i, j]
    # sorted terms make the sum independent of argument order
    mi = float(np.sum(np.sort(nij / n * np.log(nij * n / (rows[i] * cols[j])))))
    # identical partitions up to renaming are exactly 1, not 1 - eps
    if table.shape[0] == table.shape[1] == len(nij):
        return 1.0
    return float(min(1.0, max(0.0, 2.0 * mi / (h_a + h_b))))

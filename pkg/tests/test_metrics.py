import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cascode.graph import Graph, GraphError
from cascode.metrics import confusion_table, modularity, nmi

from conftest import complete, set_partitions


def brute_modularity(g, labels):
    """Double sum over all ordered node pairs."""
    m = g.edge_count
    deg = [g.degree(v) for v in range(g.node_count)]
    total = 0.0
    for i in range(g.node_count):
        for j in range(g.node_count):
            if labels[i] == labels[j]:
                a = 1.0 if j in g.adjacency[i] else 0.0
                total += a - deg[i] * deg[j] / (2.0 * m)
    return total / (2.0 * m)


def two_triangles():
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


def test_modularity_examples():
    g = two_triangles()
    assert modularity(g, [0] * 6) == pytest.approx(0.0, abs=1e-15)
    assert modularity(g, [0, 0, 0, 1, 1, 1]) == pytest.approx(0.5, abs=1e-15)
    assert modularity(complete(3), [0, 1, 2]) == pytest.approx(-1 / 3, abs=1e-15)


def test_modularity_errors():
    with pytest.raises(GraphError):
        modularity(Graph.from_edges(3, []), [0, 1, 2])
    with pytest.raises(ValueError):
        modularity(complete(3), [0, 1])


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_modularity_matches_double_sum(n):
    # every labelled graph on n nodes for n <= 4, a seeded sample at n = 5
    pairs = list(itertools.combinations(range(n), 2))
    masks = range(1, 2 ** len(pairs))
    if n == 5:
        masks = np.random.default_rng(0).choice(list(masks), 60, replace=False).tolist()
    parts = list(set_partitions(n))
    for mask in masks:
        g = Graph.from_edges(n, [p for b, p in enumerate(pairs) if mask >> b & 1])
        for labels in parts:
            assert abs(modularity(g, labels) - brute_modularity(g, labels)) <= 1e-12


@given(st.lists(st.integers(0, 4), min_size=6, max_size=6), st.permutations(range(5)))
def test_modularity_relabel_invariant(labels, perm):
    g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (1, 4)])
    renamed = [perm[x] for x in labels]
    assert modularity(g, labels) == pytest.approx(modularity(g, renamed), abs=1e-15)


def test_nmi_examples():
    a = [0, 0, 1, 1]
    assert nmi(a, a) == 1.0
    assert nmi(a, [0, 1, 0, 1]) == 0.0
    assert nmi(a, [7, 7, 3, 3]) == 1.0
    assert nmi([0, 0, 0], [5, 5, 5]) == 1.0
    assert nmi([0, 0, 0], [0, 1, 1]) == 0.0
    with pytest.raises(ValueError):
        nmi([0, 1], [0, 1, 2])


def test_nmi_hand_value():
    # A = {01}{23}, B = {012}{3}: I = ln2 - 3/4 ln3 + ... computed by formula
    a, b = [0, 0, 1, 1], [0, 0, 0, 1]
    p = np.array([[2, 0], [1, 1]]) / 4
    pa, pb = p.sum(1), p.sum(0)
    mi = sum(p[i, j] * np.log(p[i, j] / (pa[i] * pb[j])) for i in range(2) for j in range(2) if p[i, j])
    h = lambda q: -sum(x * np.log(x) for x in q if x)
    assert nmi(a, b) == pytest.approx(2 * mi / (h(pa) + h(pb)), abs=1e-15)


def test_confusion_table():
    t = confusion_table([0, 0, 1, 2], [1, 0, 0, 0])
    assert t.tolist() == [[1, 1], [1, 0], [1, 0]]
    assert t.sum() == 4


def same_up_to_renaming(a, b):
    fwd, back = {}, {}
    for x, y in zip(a, b):
        if fwd.setdefault(x, y) != y or back.setdefault(y, x) != x:
            return False
    return True


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_nmi_exhaustive(n):
    parts = list(set_partitions(n))
    for a in parts:
        for b in parts:
            v = nmi(a, b)
            assert 0.0 <= v <= 1.0
            assert v == nmi(b, a)
            assert (v == 1.0) == same_up_to_renaming(a, b)

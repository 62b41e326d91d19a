import itertools
from pathlib import Path

import pytest

from cascode.graph import Graph

ACCEPTANCE = {}


def set_partitions(n):
    """All partitions of range(n) as restricted-growth label lists."""
    if n == 0:
        yield []
        return

    def grow(prefix, top):
        if len(prefix) == n:
            yield list(prefix)
            return
        for lab in range(top + 2):
            prefix.append(lab)
            yield from grow(prefix, max(top, lab))
            prefix.pop()

    yield from grow([0], 0)


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves):
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete(n):
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def barbell4():
    """Two 4-cliques {0..3} and {4..7} joined by the edge 0-4."""
    edges = list(itertools.combinations(range(4), 2))
    edges += list(itertools.combinations(range(4, 8), 2))
    edges.append((0, 4))
    return Graph.from_edges(8, edges)


def bridged_triangles():
    """Triangles {0,1,2} and {3,4,5} joined by the edge 2-3."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])


@pytest.fixture
def record_criterion():
    """Record an acceptance verdict for the end-of-run summary."""
    def record(number, passed, detail):
        ACCEPTANCE[number] = (passed, detail)
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}")


@pytest.fixture
def karate_path():
    return Path(__file__).parent / "data" / "karate.edgelist"

"""Undirected simple graphs with dense integer node ids.

Graphs are immutable once built. Node ids run over ``0..node_count-1`` and
every adjacency list is sorted, duplicate-free and symmetric.
"""
from __future__ import annotations

import io
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, TextIO, Tuple, Union


class GraphError(ValueError):
    """Raised for invalid graph input."""


class ParseError(GraphError):
    """Malformed edge-list text. ``lineno`` is 1-based."""

    def __init__(self, message: str, lineno: Optional[int] = None, source: Optional[str] = None):
        self.lineno = lineno
        self.source = source
        where = ""
        if source is not None and lineno is not None:
            where = f"{source}:{lineno}: "
        elif lineno is not None:
            where = f"line {lineno}: "
        elif source is not None:
            where = f"{source}: "
        super().__init__(where + message)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph.

    Parameters
    ----------
    adjacency : tuple of tuple of int
        ``adjacency[v]`` is the ascending tuple of neighbours of ``v``.
    labels : tuple of str, optional
        External node names, ``labels[v]`` being the name of node ``v``.
    """

    adjacency: Tuple[Tuple[int, ...], ...]
    labels: Optional[Tuple[str, ...]] = None
    edge_count: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "edge_count", sum(map(len, self.adjacency)) // 2)

    @classmethod
    def from_edges(cls, node_count: int, edges: Iterable[Tuple[int, int]],
                   labels: Optional[Sequence[str]] = None) -> "Graph":
        """Build a graph from integer edges, dropping self-loops and duplicates."""
        if node_count < 0:
            raise GraphError("node_count must be non-negative")
        nbrs = [set() for _ in range(node_count)]
        for u, v in edges:
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise GraphError(f"edge ({u}, {v}) out of range for {node_count} nodes")
            if u == v:
                continue
            nbrs[u].add(v)
            nbrs[v].add(u)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != node_count:
                raise GraphError("labels must name every node")
            if len(set(labels)) != node_count:
                raise GraphError("labels must be distinct")
        return cls(tuple(tuple(sorted(s)) for s in nbrs), labels)

    @property
    def node_count(self) -> int:
        return len(self.adjacency)

    @property
    def label_table(self) -> Optional[dict]:
        """Mapping from external name to node id, or None for unnamed graphs."""
        if self.labels is None:
            return None
        return {name: i for i, name in enumerate(self.labels)}

    def name(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self):
        """Yield each edge once as ``(u, v)`` with ``u < v``, in ascending order."""
        for u, nb in enumerate(self.adjacency):
            for v in nb:
                if u < v:
                    yield u, v

    def __repr__(self):
        return f"Graph(node_count={self.node_count}, edge_count={self.edge_count})"


def neighbors(g: Graph, v: int) -> Tuple[int, ...]:
    """Sorted neighbours of ``v``. Raises IndexError when ``v`` is not a node."""
    if not 0 <= v < g.node_count:
        raise IndexError(f"node {v} out of range for graph with {g.node_count} nodes")
    return g.adjacency[v]


def check_invariants(g: Graph) -> None:
    """Assert the structural invariants of ``g`` by direct scan."""
    total = 0
    for v, nb in enumerate(g.adjacency):
        assert v not in nb, f"self-loop at {v}"
        assert list(nb) == sorted(set(nb)), f"adjacency of {v} not sorted/unique"
        for u in nb:
            assert 0 <= u < g.node_count
            assert v in g.adjacency[u], f"asymmetric edge {v}-{u}"
        total += len(nb)
    assert total == 2 * g.edge_count


def parse_edge_list(text: Union[str, TextIO], source: Optional[str] = None) -> Graph:
    """Parse whitespace-separated edge-list text.

    Each non-blank line not starting with ``#`` holds two node names. Names get
    ids in order of first appearance; duplicate edges and self-loops are
    dropped, though a self-loop still declares its node (``a a`` is how an
    isolated node is written).

    Raises
    ------
    ParseError
        On a line without exactly two tokens, or when no node is found.
    """
    stream = io.StringIO(text) if isinstance(text, str) else text
    ids: dict = {}
    edges = []
    for lineno, line in enumerate(stream, start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        tokens = s.split()
        if len(tokens) != 2:
            raise ParseError(f"expected 2 tokens, got {len(tokens)}", lineno, source)
        for t in tokens:
            if t not in ids:
                ids[t] = len(ids)
        edges.append((ids[tokens[0]], ids[tokens[1]]))
    if not ids:
        raise ParseError("empty graph", None, source)
    return Graph.from_edges(len(ids), edges, labels=list(ids))


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh, source=str(path))


def format_edge_list(g: Graph, header: Sequence[str] = ()) -> str:
    """Serialise ``g`` so that :func:`parse_edge_list` rebuilds the same ids.

    Edges are written grouped by their larger endpoint. A node that would
    otherwise appear out of id order is introduced by a self-loop line
    (``v v``), which the parser keeps as a node and drops as an edge.
    """
    out = [f"# {h}" for h in header]
    seen = [False] * g.node_count
    early = None  # edge (v, v+1) written ahead of its group
    for v in range(g.node_count):
        for u in g.adjacency[v]:
            if u >= v:
                break
            if early != (u, v):
                out.append(f"{g.name(u)} {g.name(v)}")
            seen[v] = True
        if not seen[v]:
            if v + 1 in g.adjacency[v]:
                out.append(f"{g.name(v)} {g.name(v + 1)}")
                seen[v + 1] = True
                early = (v, v + 1)
            else:
                out.append(f"{g.name(v)} {g.name(v)}")
            seen[v] = True
    return "\n".join(out) + "\n"


def write_edge_list(g: Graph, path, header: Sequence[str] = ()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g, header))

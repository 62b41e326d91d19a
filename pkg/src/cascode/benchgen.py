"""Benchmark networks with planted communities."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .graph import Graph

DEFAULT_P_IN = 0.9
DEFAULT_EXTERNAL_DEGREE = 2.0


class ParameterError(ValueError):
    """Invalid generator parameters."""


@dataclass(frozen=True)
class PlantedNetwork:
    graph: Graph
    truth: np.ndarray
    params: dict = field(default_factory=dict)


def default_p_out(k: int, n: int, external_degree: float = DEFAULT_EXTERNAL_DEGREE) -> float:
    """Inter-block probability giving ``external_degree`` expected outside links per node."""
    return min(1.0, external_degree / (n * (k - 1)))


def gn_benchmark(k: int, n: int, p_in: float = DEFAULT_P_IN, p_out: Optional[float] = None,
                 seed: int = 0) -> PlantedNetwork:
    """Girvan-Newman style planted partition.

    ``k`` blocks of ``n`` nodes; block ``b`` holds nodes ``b*n .. (b+1)*n - 1``.
    Each pair inside a block is linked with probability ``p_in`` and each pair
    across blocks with ``p_out`` (default: two expected external links per
    node). Draws come from ``numpy.random.default_rng(seed)`` in a fixed
    order, so output is reproducible across platforms.
    """
    if p_out is None:
        p_out = default_p_out(k, n) if k >= 2 and n >= 1 else 0.0
    if k < 2 or n < 2:
        raise ParameterError(f"need k >= 2 and n >= 2, got k={k}, n={n}")
    if not (0.0 <= p_out <= p_in <= 1.0):
        raise ParameterError(f"need 0 <= p_out <= p_in <= 1, got p_in={p_in}, p_out={p_out}")
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, 1)
    full_i, full_j = np.divmod(np.arange(n * n), n)
    src, dst = [], []
    for a in range(k):
        hit = rng.random(len(iu)) < p_in
        src.append(iu[hit] + a * n)
        dst.append(ju[hit] + a * n)
        for b in range(a + 1, k):
            hit = rng.random(n * n) < p_out
            src.append(full_i[hit] + a * n)
            dst.append(full_j[hit] + b * n)
    edges = zip(np.concatenate(src).tolist(), np.concatenate(dst).tolist())
    graph = Graph.from_edges(k * n, edges)
    truth = np.repeat(np.arange(k), n)
    params = dict(generator="gn", k=k, n=n, p_in=float(p_in), p_out=float(p_out), seed=seed)
    return PlantedNetwork(graph, truth, params)


def clique_constellation(k: int, s: int, wiring: str = "ring", seed: int = 0) -> PlantedNetwork:
    """``k`` cliques of size ``s`` joined only through one leader node each.

    Leaders are wired in a ring (a single edge when ``k == 2``) or as a
    complete graph, so all of them are structurally equivalent. ``seed``
    shuffles the node ids; before shuffling, clique ``c`` is nodes
    ``c*s .. (c+1)*s - 1`` with its leader first.
    """
    if k < 2 or s < 3:
        raise ParameterError(f"need k >= 2 and s >= 3, got k={k}, s={s}")
    if wiring not in ("ring", "complete"):
        raise ParameterError(f"wiring must be 'ring' or 'complete', got {wiring!r}")
    edges = []
    for c in range(k):
        base = c * s
        edges.extend((base + i, base + j) for i in range(s) for j in range(i + 1, s))
    leaders = [c * s for c in range(k)]
    if wiring == "complete":
        edges.extend((leaders[a], leaders[b]) for a in range(k) for b in range(a + 1, k))
    elif k == 2:
        edges.append((leaders[0], leaders[1]))
    else:
        edges.extend((leaders[c], leaders[(c + 1) % k]) for c in range(k))
    perm = np.random.default_rng(seed).permutation(k * s)
    graph = Graph.from_edges(k * s, ((int(perm[u]), int(perm[v])) for u, v in edges))
    truth = np.empty(k * s, dtype=np.int64)
    truth[perm] = np.repeat(np.arange(k), s)
    params = dict(generator="cliques", k=k, s=s, wiring=wiring, seed=seed,
                  leaders=[int(perm[v]) for v in leaders])
    return PlantedNetwork(graph, truth, params)


# Zachary (1977) karate club, members numbered 1..34.
_KARATE_EDGES = (
    (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8), (1, 9), (1, 11), (1, 12),
    (1, 13), (1, 14), (1, 18), (1, 20), (1, 22), (1, 32), (2, 3), (2, 4), (2, 8), (2, 14),
    (2, 18), (2, 20), (2, 22), (2, 31), (3, 4), (3, 8), (3, 9), (3, 10), (3, 14), (3, 28),
    (3, 29), (3, 33), (4, 8), (4, 13), (4, 14), (5, 7), (5, 11), (6, 7), (6, 11), (6, 17),
    (7, 17), (9, 31), (9, 33), (9, 34), (10, 34), (14, 34), (15, 33), (15, 34), (16, 33),
    (16, 34), (19, 33), (19, 34), (20, 34), (21, 33), (21, 34), (23, 33), (23, 34), (24, 26),
    (24, 28), (24, 30), (24, 33), (24, 34), (25, 26), (25, 28), (25, 32), (26, 32), (27, 30),
    (27, 34), (28, 34), (29, 32), (29, 34), (30, 33), (30, 34), (31, 33), (31, 34), (32, 33),
    (32, 34), (33, 34),
)


def karate_club() -> Graph:
    """Zachary's karate club: 34 members, 78 ties. Node ``i`` is member ``i + 1``."""
    return Graph.from_edges(34, ((u - 1, v - 1) for u, v in _KARATE_EDGES),
                            labels=[str(i) for i in range(1, 35)])


def format_truth(truth, graph: Optional[Graph] = None, header=()) -> str:
    """Sidecar truth file: one ``node community`` line per node."""
    out = [f"# {h}" for h in header]
    for v, c in enumerate(np.asarray(truth).tolist()):
        out.append(f"{graph.name(v) if graph is not None else v} {c}")
    return "\n".join(out) + "\n"


def parse_truth(text: str, graph: Optional[Graph] = None) -> np.ndarray:
    """Inverse of :func:`format_truth`."""
    table = graph.label_table if graph is not None else None
    pairs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        tokens = s.split()
        if len(tokens) != 2:
            raise ValueError(f"line {lineno}: expected 'node community'")
        node = table[tokens[0]] if table is not None else int(tokens[0])
        pairs.append((node, int(tokens[1])))
    truth = np.full(len(pairs), -1, dtype=np.int64)
    for v, c in pairs:
        truth[v] = c
    if (truth < 0).any():
        raise ValueError("truth file does not cover nodes 0..n-1")
    return truth

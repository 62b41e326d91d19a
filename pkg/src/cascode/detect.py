"""Cascaded leader-follower community detection.

Leaders are nodes whose betweenness is at least that of every neighbour.
Each leader opens a community; labels then spread outward one ring of
neighbours at a time, every newly labelled node relaying its label in the
next round. Leaders that recruited nobody in the first round finally join
the community most common among their neighbours.

All tie-breaking goes through one seeded permutation of the node ids (the
*salt*): nodes are ranked by ``(score, salt)``, higher first.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple

import numpy as np

from .centrality import betweenness
from .graph import Graph, GraphError


@dataclass
class CascadeTrace:
    """Audit record of one detection run.

    Attributes
    ----------
    leader_set : frozenset of int
        Nodes elected as leaders before the cascade.
    leader_order : list of int
        Leaders by descending ``(score, salt)``; position is the initial label.
    rounds : list of list of (int, tuple of int)
        For each round, the ``(claimer, claimed)`` pairs in execution order.
        Claimers that found no unlabelled neighbour are not recorded.
    orphan_reassignments : list of (int, int, int)
        ``(leader, old_label, new_label)`` in sweep order, labels uncompacted.
    """

    leader_set: frozenset
    leader_order: List[int]
    rounds: List[List[Tuple[int, Tuple[int, ...]]]] = field(default_factory=list)
    orphan_reassignments: List[Tuple[int, int, int]] = field(default_factory=list)

    def replay(self, node_count: int) -> np.ndarray:
        """Rebuild the labels at the end of the cascade from the recorded claims."""
        labels = np.full(node_count, -1, dtype=np.int64)
        for rank, v in enumerate(self.leader_order):
            labels[v] = rank
        for rnd in self.rounds:
            for claimer, claimed in rnd:
                labels[list(claimed)] = labels[claimer]
        return labels

    def first_round_claimers(self) -> Set[int]:
        return {c for c, _ in self.rounds[0]} if self.rounds else set()


def tie_break_salt(node_count: int, seed: int) -> np.ndarray:
    """Seeded random permutation of ``0..node_count-1`` used as the secondary key."""
    return np.random.default_rng(seed).permutation(node_count)


def ranked(nodes, scores, salt) -> List[int]:
    """``nodes`` sorted by descending ``(score, salt)``."""
    return sorted(nodes, key=lambda v: (scores[v], salt[v]), reverse=True)


def find_leaders(g: Graph, scores: Sequence[float]) -> Set[int]:
    """Nodes whose score is >= the score of every neighbour.

    The comparison is non-strict, so adjacent nodes with equal scores are both
    leaders. Isolated nodes are leaders.
    """
    return {
        v for v, nb in enumerate(g.adjacency)
        if all(scores[v] >= scores[u] for u in nb)
    }


def cascade_assign(g: Graph, scores: Sequence[float], leaders, seed: int = 0):
    """Spread leader labels outward until every node is labelled.

    Leader ``leader_order[i]`` gets label ``i``. In each round the frontier,
    ranked by descending key, claims its unlabelled neighbours in ascending id
    order (first claim wins); the claimed nodes form the next frontier.

    Returns
    -------
    labels : numpy.ndarray
        Uncompacted labels, one per node.
    trace : CascadeTrace
    """
    n = g.node_count
    salt = tie_break_salt(n, seed)
    order = ranked(leaders, scores, salt)
    labels = np.full(n, -1, dtype=np.int64)
    for rank, v in enumerate(order):
        labels[v] = rank
    trace = CascadeTrace(frozenset(leaders), order)

    adj = g.adjacency
    frontier = order
    while frontier:
        claims = []
        nxt = []
        for c in frontier:
            lab = labels[c]
            got = tuple(u for u in adj[c] if labels[u] < 0)
            if got:
                labels[list(got)] = lab
                claims.append((c, got))
                nxt.extend(got)
        if claims:
            trace.rounds.append(claims)
        frontier = ranked(nxt, scores, salt)
    if (labels < 0).any():
        # a component without a leader is impossible under the >= rule
        raise RuntimeError("cascade left nodes unlabelled")
    return labels, trace


def compact_labels(labels) -> np.ndarray:
    """Renumber labels to ``0..k-1`` in order of first occurrence by node id."""
    _, first, inverse = np.unique(np.asarray(labels), return_index=True, return_inverse=True)
    remap = np.empty(len(first), dtype=np.int64)
    remap[np.argsort(first, kind="stable")] = np.arange(len(first))
    return remap[inverse.ravel()]


def plurality_label(neighbour_labels, preference: Dict[int, int]) -> int:
    """Most frequent label; ties go to the label with the smallest ``preference``."""
    counts = Counter(neighbour_labels)
    top = max(counts.values())
    return min((lab for lab, c in counts.items() if c == top), key=preference.__getitem__)


def reassign_orphan_leaders(g: Graph, labels, trace: CascadeTrace, seed: int = 0) -> np.ndarray:
    """Move follower-less leaders into their neighbours' plurality community.

    Leaders that claimed nobody in the first round and have at least one
    neighbour are visited once, in ``leader_order``. Each takes the label most
    common among its neighbours' current labels, so earlier moves in the sweep
    are visible to later ones. Among tied labels the one opened by the
    higher-ranked leader wins; since leader rank comes from the seeded salt,
    the outcome depends on ``seed`` only through ``trace.leader_order``.

    Returns the final labels compacted to ``0..k-1``; reassignments are
    appended to ``trace``.
    """
    labels = np.array(labels, dtype=np.int64, copy=True)
    # leader at rank i opened label i
    preference = {rank: rank for rank in range(len(trace.leader_order))}
    active = trace.first_round_claimers()
    adj = g.adjacency
    for v in trace.leader_order:
        if v in active or not adj[v]:
            continue
        old = int(labels[v])
        new = plurality_label([int(labels[u]) for u in adj[v]], preference)
        labels[v] = new
        trace.orphan_reassignments.append((v, old, new))
    return compact_labels(labels)


def detect(g: Graph, seed: int = 0, scores: Optional[Sequence[float]] = None):
    """Detect communities of ``g``.

    Parameters
    ----------
    g : Graph
    seed : int
        Seeds the tie-break permutation. The result is a deterministic
        function of ``(g, seed)``.
    scores : array_like, optional
        Precomputed betweenness of ``g``; computed when omitted.

    Returns
    -------
    labels : numpy.ndarray
        Community of every node, compacted to ``0..k-1``.
    trace : CascadeTrace
    """
    if g.node_count == 0:
        raise GraphError("empty graph")
    if scores is None:
        scores = betweenness(g)
    leaders = find_leaders(g, scores)
    partial, trace = cascade_assign(g, scores, leaders, seed)
    return reassign_orphan_leaders(g, partial, trace, seed), trace

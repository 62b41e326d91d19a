"""Cascaded leader-follower community detection with a greedy-modularity baseline."""

__version__ = "0.1.0"

from .benchgen import PlantedNetwork, clique_constellation, gn_benchmark, karate_club
from .centrality import betweenness, brute_force_betweenness
from .detect import CascadeTrace, cascade_assign, detect, find_leaders, reassign_orphan_leaders
from .graph import Graph, GraphError, ParseError, neighbors, parse_edge_list, read_edge_list
from .greedy import greedy_modularity_partition
from .metrics import modularity, nmi

__all__ = [
    "CascadeTrace", "Graph", "GraphError", "ParseError", "PlantedNetwork", "betweenness",
    "brute_force_betweenness", "cascade_assign", "clique_constellation", "detect",
    "find_leaders", "gn_benchmark", "greedy_modularity_partition", "karate_club",
    "modularity", "neighbors", "nmi", "parse_edge_list", "read_edge_list",
    "reassign_orphan_leaders",
]

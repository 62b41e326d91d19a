"""
Karate club: cascade versus greedy modularity
=============================================

Detect communities in Zachary's karate club with the cascade and with the
greedy agglomerative baseline, then compare the two partitions.
"""

from cascode import detect, greedy_modularity_partition, karate_club, modularity, nmi
from cascode.centrality import betweenness

g = karate_club()
print(g)

scores = betweenness(g)
labels, trace = detect(g, seed=0, scores=scores)

# the leaders are local betweenness maxima; members 1 and 34 head the two factions
for v in trace.leader_order:
    print(f"leader {g.name(v):>2}  betweenness {scores[v]:7.2f}  degree {g.degree(v)}")

baseline = greedy_modularity_partition(g)
print("cascade communities:", labels.max() + 1, " Q =", round(modularity(g, labels), 4))
print("greedy communities: ", baseline.max() + 1, " Q =", round(modularity(g, baseline), 4))
print("NMI between the two:", round(nmi(labels, baseline), 4))

###############################################################################
# Orphan leaders (those that recruited nobody) are listed in the trace.
print("orphan reassignments:", trace.orphan_reassignments)

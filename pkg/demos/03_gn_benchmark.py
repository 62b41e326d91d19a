"""
Planted partitions (GN benchmark)
=================================

On random planted partitions the leaders are few: any node bridging two
blocks tends to be a betweenness maximum for both, so blocks merge. The
greedy baseline is far less sensitive to this.
"""

import numpy as np

from cascode.cli import run_bench

for n, k in [(10, 5), (10, 20), (6, 15)]:
    result = run_bench(k, n, seeds=5)
    agg = result["aggregate"]
    print(f"n={n:2d} k={k:2d}  NMI cascade {agg['nmi_cascode_vs_truth']['mean']:.3f}  "
          f"greedy {agg['nmi_greedy_vs_truth']['mean']:.3f}")

###############################################################################
# Lowering the mixing rate does not rescue the cascade until blocks are fully
# disconnected.
for ext in (0.0, 0.5, 2.0):
    result = run_bench(5, 10, p_in=0.9, p_out=ext / 40, seeds=5)
    print(f"external degree {ext}: NMI cascade "
          f"{result['aggregate']['nmi_cascode_vs_truth']['mean']:.3f}")

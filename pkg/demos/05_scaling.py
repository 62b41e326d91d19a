"""
Run time grows like |V||E|
==========================

Times detection on sparse planted partitions of growing size (mean degree 10)
and fits the log-log slope of time against |V||E|. Takes about half a minute.
"""

from cascode.cli import measure_scaling

report = measure_scaling([200, 400, 800, 1600, 3200], seed=0)
for row in report["rows"]:
    print(f"|V|={row['nodes']:5d} |E|={row['edges']:6d}  {row['seconds']:.3f} s")
print("slope:", round(report["slope"], 3))

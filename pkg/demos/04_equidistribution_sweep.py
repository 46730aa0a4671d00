"""
Exhaustive sweeps
=================

Joint distribution tables over all of S_n and the named property checks.
"""

import numpy as np

from permstat import distribution, export_table, verify

for n in range(1, 8):
    same = distribution(["des", "stat"], n) == distribution(["des", "maj"], n)
    print(f"n={n}: (des,stat) and (des,maj) equidistributed: {same}")

table = distribution(["des", "maj"], 4)
grid = np.zeros((4, 7), dtype=int)
for (d, m), count in table.counts.items():
    grid[d, m] = count
print("\nrows des = 0..3, columns maj = 0..6")
print(grid)

print()
print(export_table(distribution(["inv"], 4), "csv").decode())

for prop in ("involution", "maj-stat-swap", "additivity-stat", "firstmax-relations"):
    report = verify(prop, 7)
    print(prop, report.cases_checked, "ok" if report.ok else report.failures, report.details)

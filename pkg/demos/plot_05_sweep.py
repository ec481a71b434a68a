"""
Sweeping the tenure parameters
==============================

Each (alpha, beta) pair becomes one column. All columns of a row start
from the same greedy solution, so differences come from the tenure alone.
"""

from eqcol import bench
from eqcol.graph import generate_kneser, myciel, queen_graph

instances = [(queen_graph(6, 6), 7, 7), (myciel(5), 6, 6), (generate_kneser(7, 3), 3, 3)]
table = bench.run_sweep(instances, alphas=[0.3, 0.9], betas=[5, 15], time_limit=10,
                        iterations=5000, seed=1)
print(table.render())

# the same records as CSV
print(bench.csv_text(table.records()))

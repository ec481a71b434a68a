"""
Descending the number of classes
================================

The driver starts from a greedy coloring and keeps dropping one class
until it hits the known lower bound or runs out of time. A failed search
is retried from a fresh start while time remains.
"""

from eqcol.construct import make_rng
from eqcol.driver import SHORT_ITERATION_CAP, brute_force_chi_eq, solve_descending
from eqcol.graph import myciel, random_graph

g = myciel(6)
rep = solve_descending(g, lower_bound=7, time_limit=30, rng=make_rng(1),
                       iteration_cap=SHORT_ITERATION_CAP)
print(f"{g.name}: greedy {rep.initial_k} classes, best {rep.best_k}, "
      f"{rep.restarts} restarts, {rep.total_elapsed:.1f} s ({rep.status})")
for k, r in rep.schedule:
    print(f"  k={k:2d} solved={r.solved} iterations={r.iterations_run}")

# on small graphs the exhaustive oracle gives the true answer
small = random_graph(9, 0.5, make_rng(0))
rep = solve_descending(small, 1, time_limit=2, rng=make_rng(0))
print(small.name, "tabu:", rep.best_k, "exact:", brute_force_chi_eq(small))

"""
One tabu search run
===================

Start from a greedy equitable partition and let the tabu search remove the
remaining conflicts at a fixed number of classes.
"""

from eqcol.construct import make_rng, procedure1
from eqcol.graph import queen_graph
from eqcol.tabu import StopCondition, TenureParams, tabu_eqcol

g = queen_graph(7, 7)
rng = make_rng(3)
s0 = procedure1(g, 8, rng)
print("greedy start: f =", s0.objective, "sizes", s0.class_size)

trace = []
res = tabu_eqcol(g, 8, s0, TenureParams(0.9, 5), StopCondition(max_iterations=20_000), rng,
                 trace=trace)
print(f"solved={res.solved} best f={res.best_objective} "
      f"after {res.iterations_to_best} of {res.iterations_run} iterations")

# the first few moves: ("move", v, class) or ("swap", v, u), with their deltas
for m in trace[:8]:
    print(m)

"""
Equitable partitions and move deltas
====================================

A partition keeps, for every vertex and class, the number of neighbors in
that class. Every move is scored from that table in constant time.
"""

from eqcol.graph import cycle_graph
from eqcol.partition import Partition, verify_eqcol

g = cycle_graph(5)
s = Partition.from_assignment(g, 2, [0, 0, 0, 1, 1])
print("sizes", s.class_size, "conflicting edges", s.objective)
print("neighbor tally\n", s.gamma)

# n = 5, k = 2: one class may hold 3 vertices, the other 2
plus, minus = s.equity_sets()
print("large classes", plus, "small classes", minus)

# moving vertex 1 from the large class to the small one
print("delta of 1-move", s.delta_1move(1, 1))
s.apply_1move(1, 1)
print("after:", s.color_of, "f =", s.objective)

# swapping two vertices keeps the class sizes
print("delta of swap (0, 3)", s.delta_2exchange(0, 3))
s.apply_2exchange(0, 3)
print("after:", s.color_of, "f =", s.objective, "proper:", verify_eqcol(g, s))

# the cached state always agrees with a fresh recount
s.check()

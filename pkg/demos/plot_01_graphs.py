"""
Building and reading graphs
===========================

Graphs are immutable adjacency sets. They come from DIMACS ``.col`` text
or from the built-in generators.
"""

import numpy as np

from eqcol.graph import generate_kneser, myciel, parse_dimacs, queen_graph, to_dimacs

# a tiny DIMACS file: comments, a problem line, 1-based edges
text = """c a 4-cycle
p edge 4 4
e 1 2
e 2 3
e 3 4
e 4 1
"""
g = parse_dimacs(text, name="square")
print(g.name, g.n, g.m, list(g.edges()))

# degrees and the dense adjacency matrix are cached numpy arrays
print(g.degrees, g.adj_matrix.sum() // 2)

# generators for the standard benchmark families
for h in (generate_kneser(9, 4), myciel(6), queen_graph(8, 8)):
    print(f"{h.name:12s} n={h.n:4d} m={h.m:5d} max degree={int(np.max(h.degrees))}")

# writing is the inverse of parsing
assert parse_dimacs(to_dimacs(g)).adjacency == g.adjacency

"""Tabu search heuristic for the equitable graph coloring problem."""

from .construct import make_rng, naive, procedure1, procedure2
from .driver import SolveReport, brute_force_chi_eq, solve_descending
from .graph import (
    DimacsError,
    Graph,
    generate_kneser,
    max_degree,
    parse_dimacs,
    read_dimacs,
    to_dimacs,
)
from .partition import EquityError, InvalidMove, Partition, verify_eqcol
from .tabu import (
    SearchResult,
    StopCondition,
    TabuList,
    TenureParams,
    best_admissible_move,
    tabu_eqcol,
    tenure,
)

__version__ = "0.1.0"

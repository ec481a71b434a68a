"""Descending-k solve loop and an exhaustive oracle for tiny graphs."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .construct import naive, procedure2
from .graph import Graph
from .partition import Partition, verify_eqcol
from .tabu import SearchResult, StopCondition, TenureParams, tabu_eqcol

log = logging.getLogger(__name__)

DEFAULT_ITERATION_CAP = 500_000
SHORT_ITERATION_CAP = 30_000  # per-search cap suited to budgets of about a minute
BRUTE_FORCE_MAX_N = 12


@dataclass
class SolveReport:
    best_k: int
    best_coloring: Partition
    initial_k: int
    lower_bound_used: int
    schedule: list[tuple[int, SearchResult]] = field(default_factory=list)
    total_elapsed: float = 0.0
    status: str = ""
    restarts: int = 0  # extra searches at a k whose first search failed
    total_iterations: int = 0

    @property
    def last_result(self):
        return self.schedule[-1][1] if self.schedule else None


def solve_descending(graph: Graph, lower_bound: int = 1, params: TenureParams = TenureParams(),
                     time_limit: float = 3600.0, rng=None,
                     iteration_cap: int = DEFAULT_ITERATION_CAP,
                     max_restarts: Optional[int] = None) -> SolveReport:
    """Find an equitable coloring with as few classes as possible.

    Starts from :func:`~eqcol.construct.naive`, then repeatedly drops one
    class with :func:`~eqcol.construct.procedure2` and runs the tabu search,
    each search capped at ``iteration_cap`` iterations and the remaining
    time. A search that hits its cap without success is repeated from a
    fresh :func:`~eqcol.construct.procedure2` start, at most ``max_restarts``
    times per k (None: until the time is up; 0: give up on the first
    failure). Stops when the time is up, when a k fails for good, once
    ``lower_bound`` classes are reached, or when the search has no moves at
    all. With a finite ``max_restarts`` and a generous time limit the whole
    run is a deterministic function of the seed. Time spent in ``naive`` is not charged to
    ``time_limit``.

    ``schedule`` holds one entry per k tried: the successful search, or the
    failed one with the lowest objective.
    """
    if not 1 <= lower_bound <= graph.n:
        raise ValueError(f"lower bound {lower_bound} outside 1..{graph.n}")
    if rng is None:
        rng = np.random.default_rng()

    current = naive(graph, rng)
    report = SolveReport(current.k, current, current.k, lower_bound)
    if current.k <= lower_bound:
        report.status = ("initial coloring already at the lower bound"
                         if current.k == lower_bound else
                         f"initial coloring uses {current.k} < lower bound {lower_bound} classes")
        return report

    start = time.perf_counter()
    k = current.k - 1
    while k >= lower_bound:
        best = None
        attempts = 0
        while True:
            remaining = time_limit - (time.perf_counter() - start)
            if remaining <= 0:
                break
            if best is not None:
                report.restarts += 1
            attempts += 1
            s0 = procedure2(graph, k, current, rng)
            result = tabu_eqcol(graph, k, s0, params,
                                StopCondition(iteration_cap, remaining), rng)
            report.total_iterations += result.iterations_run
            log.debug("k=%d solved=%s f*=%d iters=%d %.2fs", k, result.solved,
                      result.best_objective, result.iterations_run, result.elapsed)
            if best is None or result.best_objective < best.best_objective:
                best = result
            if result.solved or result.stuck:
                break
            if max_restarts is not None and attempts > max_restarts:
                break
        if best is None:
            report.status = "time limit reached"
            break
        report.schedule.append((k, best))
        if not best.solved:
            report.status = f"no {k}-eqcol found"
            break
        current = best.best
        report.best_k, report.best_coloring = k, current
        k -= 1
    else:
        report.status = "lower bound reached"
    report.total_elapsed = time.perf_counter() - start
    assert verify_eqcol(graph, report.best_coloring)
    return report


def brute_force_chi_eq(graph: Graph) -> int:
    """Equitable chromatic number by exhaustive backtracking (n <= 12 only)."""
    n = graph.n
    if n > BRUTE_FORCE_MAX_N:
        raise ValueError(f"brute force refused for n={n} > {BRUTE_FORCE_MAX_N}")
    if n == 0:
        return 0
    for k in range(1, n + 1):
        if find_eqcol(graph, k) is not None:
            return k
    raise AssertionError("unreachable: singletons always work")


def find_eqcol(graph: Graph, k: int):
    """A proper equitable k-coloring as a list of classes per vertex, or None."""
    n = graph.n
    q, r = divmod(n, k)
    adj = graph.adjacency
    color = [-1] * n
    sizes = [0] * k

    def extend(v, big):
        if v == n:
            return True
        cap = q + 1 if big < r else q
        used = 0
        for c in range(k):
            if sizes[c] == 0:
                # empty classes are interchangeable: try only the first one
                if used:
                    continue
                used = 1
            if sizes[c] >= cap or any(color[w] == c for w in adj[v]):
                continue
            color[v] = c
            sizes[c] += 1
            if extend(v + 1, big + (sizes[c] == q + 1)):
                return True
            sizes[c] -= 1
            color[v] = -1
        return False

    return color if extend(0, 0) else None

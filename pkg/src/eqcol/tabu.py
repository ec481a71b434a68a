"""Tabu search for equitable k-colorings.

Solutions are equitable k-partitions scored by the number of edges inside
classes. Each iteration scans the whole neighborhood:

* 1-moves take a conflicting vertex out of a class of size ``n//k + 1`` and
  put it into a class of size ``n//k`` (only when ``k`` does not divide
  ``n``);
* 2-exchanges swap the classes of a conflicting vertex ``v`` and any vertex
  ``u`` in another class, skipping pairs that are enumerated from the other
  side.

After leaving class ``i`` the moved vertex ``v`` may not return to ``i``
for ``floor(alpha * |C(s)|) + Random(beta)`` iterations, where ``C(s)`` is the
conflicting set of the solution being left. A tabu move is still allowed
when it beats the best objective seen so far.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .graph import Graph
from .partition import EquityError, Partition, equity_ok

DEFAULT_ALPHA = 0.9
DEFAULT_BETA = 5


class TabuList:
    """Tabu features ``(vertex, class)`` stored as expiry iterations.

    A feature stored at iteration ``it`` with tenure ``t`` is tabu during
    iterations ``it + 1 .. it + t`` and free again from ``it + t + 1`` on.
    """

    def __init__(self, n, k):
        self.expiry = np.zeros((n, k), dtype=np.int64)

    def add(self, v, c, iteration, tenure):
        self.expiry[v, c] = iteration + tenure + 1

    def is_tabu(self, v, c, iteration) -> bool:
        return bool(self.expiry[v, c] > iteration)

    def live(self, v, c, iteration) -> int:
        """Remaining iterations during which ``(v, c)`` stays tabu."""
        return max(0, int(self.expiry[v, c]) - iteration)


@dataclass(frozen=True)
class TenureParams:
    alpha: float = DEFAULT_ALPHA
    beta: int = DEFAULT_BETA

    def __post_init__(self):
        if self.alpha < 0:
            raise ValueError("alpha must be nonnegative")
        if self.beta < 1:
            raise ValueError("beta must be at least 1")


@dataclass(frozen=True)
class StopCondition:
    max_iterations: Optional[int] = None
    time_limit: Optional[float] = None

    def __post_init__(self):
        if self.max_iterations is None and self.time_limit is None:
            raise ValueError("need an iteration bound, a time limit, or both")


@dataclass
class SearchResult:
    best: Partition
    best_objective: int
    iterations_run: int
    iterations_to_best: int
    elapsed: float
    stuck: bool = False  # stopped because the neighborhood was empty

    @property
    def solved(self) -> bool:
        return self.best_objective == 0


class Move(NamedTuple):
    """``kind`` is ``"move"`` (``target`` is a class) or ``"swap"`` (``target`` is a vertex)."""

    kind: str
    v: int
    target: int
    delta: int


def tenure(params: TenureParams, conflict_count: int, rng) -> int:
    # the epsilon keeps e.g. 0.3 * 10 from flooring to 2
    return math.floor(params.alpha * conflict_count + 1e-9) + int(rng.integers(params.beta))


# --------------------------------------------------------------------------
# neighborhood


@dataclass
class Neighborhood:
    """All candidate moves of a solution, as dense arrays.

    1-moves: ``move_src[a] -> move_dst[b]`` with delta ``move_delta[a, b]``.
    2-exchanges: ``swap_v[a] <-> u`` for ``u`` in ``0..n-1`` where
    ``swap_valid[a, u]``, with delta ``swap_delta[a, u]``.
    """

    move_src: np.ndarray
    move_dst: np.ndarray
    move_delta: np.ndarray
    swap_v: np.ndarray
    swap_valid: np.ndarray
    swap_delta: np.ndarray

    @property
    def n_moves(self) -> int:
        return self.move_delta.size

    @property
    def n_swaps(self) -> int:
        return int(self.swap_valid.sum())

    def descriptors(self) -> set[tuple]:
        """Every move as ``("move", v, j)`` or ``("swap", v, u)``."""
        out = {("move", int(v), int(j)) for v in self.move_src for j in self.move_dst}
        a, u = np.nonzero(self.swap_valid)
        out |= {("swap", int(self.swap_v[x]), int(y)) for x, y in zip(a, u)}
        return out


def neighborhood(s: Partition) -> Neighborhood:
    g, n, k = s.graph, s.n, s.k
    color, gamma = s.color_of, s.gamma
    own = s.own_conflicts()
    conflicted = own > 0
    C = np.flatnonzero(conflicted)

    q, r = divmod(n, k)
    if r:
        plus = s.class_size == q + 1
        src = C[plus[color[C]]]
        dst = np.flatnonzero(~plus)
    else:
        src = dst = np.empty(0, dtype=np.int64)
    move_delta = gamma[np.ix_(src, dst)] - own[src, None]

    ci = color[C]
    # delta(v, u) = gamma[u, i] - gamma[u, j] + gamma[v, j] - gamma[v, i] - 2 * adj(u, v)
    swap_delta = (gamma[:, ci].T - own[None, :]
                  + gamma[C][:, color] - own[C, None]
                  - 2 * g.adj_matrix[C])
    swap_valid = (ci[:, None] != color[None, :]) & (
        (ci[:, None] < color[None, :]) | ~conflicted[None, :]
    )
    return Neighborhood(src, dst, move_delta, C, swap_valid, swap_delta)


def best_admissible_move(s: Partition, tabu: TabuList, iteration: int,
                         best_so_far: int, rng) -> Optional[Move]:
    """Pick the lowest-delta admissible move, ties broken uniformly at random.

    A move is admissible when none of the features it creates is tabu, or
    when it would reach an objective strictly below ``best_so_far``. If every
    move is tabu the best move overall is returned instead. Returns None
    when the neighborhood is empty.
    """
    nh = neighborhood(s)
    if nh.n_moves == 0 and nh.n_swaps == 0:
        return None
    f = s.objective
    expiry = tabu.expiry

    move_tabu = expiry[np.ix_(nh.move_src, nh.move_dst)] > iteration
    # swapping v (class i) with u (class j) creates features (v, j) and (u, i)
    swap_tabu = ((expiry[nh.swap_v][:, s.color_of] > iteration)
                 | (expiry[:, s.color_of[nh.swap_v]].T > iteration))

    move_ok = ~move_tabu | (f + nh.move_delta < best_so_far)
    swap_ok = nh.swap_valid & (~swap_tabu | (f + nh.swap_delta < best_so_far))
    if not move_ok.any() and not swap_ok.any():
        move_ok = np.ones_like(move_tabu)
        swap_ok = nh.swap_valid

    big = np.iinfo(np.int64).max
    move_d = np.where(move_ok, nh.move_delta, big)
    swap_d = np.where(swap_ok, nh.swap_delta, big)
    best = min(move_d.min(initial=big), swap_d.min(initial=big))

    move_ties = np.flatnonzero(move_d == best)
    swap_ties = np.flatnonzero(swap_d == best)
    pick = int(rng.integers(move_ties.size + swap_ties.size))
    if pick < move_ties.size:
        a, b = divmod(int(move_ties[pick]), nh.move_dst.size)
        return Move("move", int(nh.move_src[a]), int(nh.move_dst[b]), int(best))
    a, u = divmod(int(swap_ties[pick - move_ties.size]), s.n)
    return Move("swap", int(nh.swap_v[a]), u, int(best))


def apply_move(s: Partition, move: Move) -> int:
    if move.kind == "move":
        return s.apply_1move(move.v, move.target)
    return s.apply_2exchange(move.v, move.target)


# --------------------------------------------------------------------------
# search loop


def tabu_eqcol(graph: Graph, k: int, s0: Partition, params: TenureParams,
               stop: StopCondition, rng, trace=None) -> SearchResult:
    """Search for an equitable k-coloring starting from ``s0``.

    ``s0`` is copied, never mutated. Stops at objective 0, at the iteration
    bound, at the time limit (checked once per iteration), or when no move
    exists. ``trace``, if given, is a list that receives every applied Move.
    """
    if s0.graph is not graph and s0.graph != graph:
        raise ValueError("initial solution belongs to a different graph")
    if s0.k != k:
        raise ValueError(f"initial solution has {s0.k} classes, expected {k}")
    if not equity_ok(s0.class_size):
        raise EquityError(f"initial class sizes {s0.class_size.tolist()} violate equity")

    start = time.perf_counter()
    deadline = None if stop.time_limit is None else start + stop.time_limit
    max_iter = stop.max_iterations

    s = s0.copy()
    tabu = TabuList(graph.n, k)
    best_colors = s.color_of.copy()
    best_f = s.objective
    it = best_it = 0
    stuck = False
    while best_f > 0:
        if max_iter is not None and it >= max_iter:
            break
        if deadline is not None and time.perf_counter() >= deadline:
            break
        it += 1
        move = best_admissible_move(s, tabu, it, best_f, rng)
        if move is None:
            stuck = True
            break
        n_conflicting = int(np.count_nonzero(s.own_conflicts()))
        old_class = int(s.color_of[move.v])
        apply_move(s, move)
        tabu.add(move.v, old_class, it, tenure(params, n_conflicting, rng))
        if trace is not None:
            trace.append(move)
        if s.objective < best_f:
            best_f = s.objective
            best_colors = s.color_of.copy()
            best_it = it

    best = Partition.from_assignment(graph, k, best_colors)
    return SearchResult(best, best.objective, it, best_it, time.perf_counter() - start, stuck)

"""Initial solutions: greedy equitable placement from scratch or from a
(k+1)-eqcol, and a deterministic first coloring to seed the descent.

Randomness always comes from a ``numpy.random.Generator`` (PCG64), so a
seed fixes every draw on every platform.
"""

from __future__ import annotations

import numpy as np

from .graph import Graph
from .partition import EquityError, Partition, verify_eqcol


def make_rng(seed=None) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _place(graph, k, color_of, order, rng):
    """Greedy equitable placement of ``order`` into ``color_of`` (in place).

    Each vertex goes to the lowest-index class that still has room and holds
    none of its neighbors; failing that, to a random class with room. Room is
    ``n//k + 1`` until ``n % k`` classes have reached that size, then ``n//k``.
    """
    n = graph.n
    q, r = divmod(n, k)
    sizes = np.bincount(color_of[color_of >= 0], minlength=k)
    big = int((sizes == q + 1).sum())
    for v in order:
        cap = q + 1 if big < r else q
        room = sizes <= cap - 1
        nb_colors = color_of[graph.neighbors[v]]
        blocked = np.bincount(nb_colors[nb_colors >= 0], minlength=k) > 0
        free = np.flatnonzero(room & ~blocked)
        if free.size:
            i = int(free[0])
        else:
            i = int(rng.choice(np.flatnonzero(room)))
        color_of[v] = i
        sizes[i] += 1
        if sizes[i] == q + 1:
            big += 1
    return color_of


def procedure1(graph: Graph, k: int, rng, partial=None) -> Partition:
    """Random-order greedy equitable k-partition, optionally completing ``partial``.

    ``partial`` holds a class index per vertex, or -1 for vertices still to
    place. The unplaced vertices are shuffled once up front.
    """
    n = graph.n
    if not 1 <= k <= n:
        raise ValueError(f"k={k} outside 1..{n}")
    if partial is None:
        color_of = np.full(n, -1, dtype=np.int64)
    else:
        color_of = np.array(partial, dtype=np.int64)
        if color_of.shape != (n,) or color_of.max(initial=-1) >= k or color_of.min(initial=-1) < -1:
            raise ValueError("partial assignment must give -1 or a class in 0..k-1 per vertex")
        q, r = divmod(n, k)
        sizes = np.bincount(color_of[color_of >= 0], minlength=k)
        if sizes.max() > q + 1 or (sizes == q + 1).sum() > r:
            raise EquityError(f"partial class sizes {sizes.tolist()} exceed the equity caps")
    order = rng.permutation(np.flatnonzero(color_of < 0))
    _place(graph, k, color_of, order.tolist(), rng)
    return Partition.from_assignment(graph, k, color_of)


def procedure2(graph: Graph, k: int, prev: Partition, rng) -> Partition:
    """k-partition seeded by dropping one class of the (k+1)-eqcol ``prev``.

    A random permutation picks which ``k`` old classes survive (and their new
    indices); the vertices of the dropped class are re-placed greedily.
    """
    if prev.k != k + 1 or not verify_eqcol(graph, prev):
        raise ValueError(f"procedure2 needs a proper equitable {k + 1}-coloring")
    perm = rng.permutation(k + 1)
    new_index = np.empty(k + 1, dtype=np.int64)
    new_index[perm] = np.arange(k + 1)
    partial = new_index[prev.color_of]
    partial[partial == k] = -1
    return procedure1(graph, k, rng, partial)


def greedy_color_count(graph: Graph, order) -> int:
    """Colors used by first-fit greedy (no balance constraint) along ``order``."""
    color_of = np.full(graph.n, -1, dtype=np.int64)
    for v in order:
        used = set(color_of[graph.neighbors[v]].tolist())
        c = 0
        while c in used:
            c += 1
        color_of[v] = c
    return int(color_of.max()) + 1 if graph.n else 0


def naive(graph: Graph, rng) -> Partition:
    """First proper equitable coloring by escalating k.

    Vertices are taken by decreasing degree (ties by index). Starting from
    the first-fit greedy color count, the greedy equitable placement is tried
    for k, k+1, ... until it yields no conflict; k = n always succeeds.
    """
    n = graph.n
    if n == 0:
        raise ValueError("empty graph")
    order = sorted(range(n), key=lambda v: (-graph.degrees[v], v))
    for k in range(max(1, greedy_color_count(graph, order)), n + 1):
        color_of = _place(graph, k, np.full(n, -1, dtype=np.int64), order, rng)
        s = Partition.from_assignment(graph, k, color_of)
        if s.objective == 0:
            return s
    raise AssertionError("unreachable: k = n gives singleton classes")

"""Equity-constrained k-partitions with incremental conflict bookkeeping.

A :class:`Partition` keeps an ``n x k`` table ``gamma`` where ``gamma[v, c]``
counts neighbors of ``v`` currently in class ``c``. With it both move
deltas are O(1) and applying a move costs O(deg v).
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .graph import Graph


class EquityError(ValueError):
    """Class sizes differ by more than one."""


class InvalidMove(ValueError):
    pass


def equity_ok(sizes) -> bool:
    sizes = np.asarray(sizes)
    return sizes.size == 0 or int(sizes.max() - sizes.min()) <= 1


class Partition:
    """Assignment of the vertices of ``graph`` to classes ``0..k-1``.

    The equity invariant holds for every live instance; constructors reject
    unbalanced assignments and the move methods refuse moves that would
    break it.
    """

    def __init__(self, graph: Graph, k: int, color_of, gamma, class_size, objective):
        self.graph = graph
        self.k = k
        self.color_of = color_of
        self.gamma = gamma
        self.class_size = class_size
        self.objective = objective

    @classmethod
    def from_assignment(cls, graph: Graph, k: int, color_of) -> "Partition":
        n = graph.n
        if not 1 <= k <= n:
            raise ValueError(f"k={k} outside 1..{n}")
        color_of = np.array(color_of, dtype=np.int64)
        if color_of.shape != (n,):
            raise ValueError(f"expected {n} class indices, got shape {color_of.shape}")
        if n and (color_of.min() < 0 or color_of.max() >= k):
            raise ValueError(f"class indices must lie in 0..{k - 1}")
        sizes = np.bincount(color_of, minlength=k)
        if not equity_ok(sizes):
            lo, hi = int(np.argmin(sizes)), int(np.argmax(sizes))
            raise EquityError(
                f"class sizes {sizes[hi]} (class {hi}) and {sizes[lo]} (class {lo}) "
                "violate equity"
            )
        gamma = tally_conflicts(graph, k, color_of)
        objective = int(gamma[np.arange(n), color_of].sum()) // 2
        return cls(graph, k, color_of, gamma, sizes, objective)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def r(self) -> int:
        return self.n % self.k

    def copy(self) -> "Partition":
        return Partition(self.graph, self.k, self.color_of.copy(), self.gamma.copy(),
                         self.class_size.copy(), self.objective)

    def classes(self) -> list[list[int]]:
        out = [[] for _ in range(self.k)]
        for v, c in enumerate(self.color_of.tolist()):
            out[c].append(v)
        return out

    def own_conflicts(self) -> np.ndarray:
        """``gamma[v, color_of[v]]`` for every vertex."""
        return self.gamma[np.arange(self.n), self.color_of]

    def conflicting_set(self) -> set[int]:
        return set(np.flatnonzero(self.own_conflicts()).tolist())

    def equity_sets(self) -> tuple[set[int], set[int]]:
        """Classes of size ``n//k + 1`` and of size ``n//k``."""
        q = self.n // self.k
        plus = set(np.flatnonzero(self.class_size == q + 1).tolist())
        minus = set(np.flatnonzero(self.class_size == q).tolist())
        return plus, minus

    # -- moves ---------------------------------------------------------------

    def delta_1move(self, v: int, j: int) -> int:
        i = self.color_of[v]
        if j == i:
            raise InvalidMove(f"vertex {v} is already in class {j}")
        return int(self.gamma[v, j] - self.gamma[v, i])

    def delta_2exchange(self, v: int, u: int) -> int:
        i, j = self.color_of[v], self.color_of[u]
        if i == j:
            raise InvalidMove(f"vertices {v} and {u} share class {i}")
        a = 1 if self.graph.has_edge(u, v) else 0
        gamma = self.gamma
        return int((gamma[u, i] - a) - gamma[u, j] + (gamma[v, j] - a) - gamma[v, i])

    def apply_1move(self, v: int, j: int) -> int:
        """Move ``v`` from a largest class into a smallest one; returns the delta."""
        i = self.color_of[v]
        if j == i:
            raise InvalidMove(f"vertex {v} is already in class {j}")
        q = self.n // self.k
        if self.class_size[i] != q + 1 or self.class_size[j] != q:
            raise InvalidMove(
                f"1-move of vertex {v} from class {i} (size {self.class_size[i]}) to "
                f"class {j} (size {self.class_size[j]}) would break equity"
            )
        delta = self.delta_1move(v, j)
        self._relocate(v, i, j)
        self.class_size[i] -= 1
        self.class_size[j] += 1
        self.objective += delta
        return delta

    def apply_2exchange(self, v: int, u: int) -> int:
        """Swap the classes of ``v`` and ``u``; returns the delta."""
        delta = self.delta_2exchange(v, u)
        i, j = self.color_of[v], self.color_of[u]
        self._relocate(v, i, j)
        self._relocate(u, j, i)
        self.objective += delta
        return delta

    def _relocate(self, v, i, j):
        nb = self.graph.neighbors[v]
        self.gamma[nb, i] -= 1
        self.gamma[nb, j] += 1
        self.color_of[v] = j

    # -- checks ----------------------------------------------------------------

    def recompute_objective(self) -> int:
        """Edges inside classes, counted from scratch."""
        c = self.color_of
        return sum(1 for u, v in self.graph.edges() if c[u] == c[v])

    def check(self):
        """Assert every cached quantity against a full rebuild."""
        fresh = Partition.from_assignment(self.graph, self.k, self.color_of)
        assert np.array_equal(fresh.gamma, self.gamma), "gamma out of sync"
        assert np.array_equal(fresh.class_size, self.class_size), "class sizes out of sync"
        assert fresh.objective == self.objective == self.recompute_objective(), \
            "objective out of sync"

    def __repr__(self):
        return f"Partition(k={self.k}, f={self.objective}, sizes={self.class_size.tolist()})"


def tally_conflicts(graph: Graph, k: int, color_of) -> np.ndarray:
    gamma = np.zeros((graph.n, k), dtype=np.int64)
    for u, v in graph.edges():
        gamma[u, color_of[v]] += 1
        gamma[v, color_of[u]] += 1
    return gamma


def verify_eqcol(graph: Graph, s: Partition) -> bool:
    """True iff ``s`` is a proper equitable coloring of ``graph`` (checked from scratch)."""
    color_of = np.asarray(s.color_of)
    if color_of.shape != (graph.n,):
        return False
    sizes = np.bincount(color_of, minlength=s.k)
    if sizes.size != s.k or not equity_ok(sizes):
        return False
    return all(color_of[u] != color_of[v] for u, v in graph.edges())


# --------------------------------------------------------------------------
# coloring files: header "s <k> <f>", then "<vertex> <color>" per line, 1-based


def format_coloring(s: Partition) -> str:
    lines = [f"s {s.k} {s.objective}"]
    lines.extend(f"{v + 1} {c + 1}" for v, c in enumerate(s.color_of.tolist()))
    return "\n".join(lines) + "\n"


def write_coloring(s: Partition, path):
    Path(path).write_text(format_coloring(s))


def parse_coloring(text: str, graph: Graph) -> Partition:
    """Read a coloring file back into a Partition of ``graph``.

    Raises ValueError for malformed input and EquityError for unbalanced
    classes; conflicts are allowed and show up in the objective.
    """
    k = None
    color_of = np.full(graph.n, -1, dtype=np.int64)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens:
            continue
        if tokens[0] == "s":
            if k is not None or len(tokens) != 3:
                raise ValueError(f"line {lineno}: bad header {raw.strip()!r}")
            k = int(tokens[1])
            continue
        if k is None or len(tokens) != 2:
            raise ValueError(f"line {lineno}: expected '<vertex> <color>' after header")
        v, c = int(tokens[0]) - 1, int(tokens[1]) - 1
        if not 0 <= v < graph.n or not 0 <= c < k:
            raise ValueError(f"line {lineno}: vertex or color out of range")
        if color_of[v] != -1:
            raise ValueError(f"line {lineno}: vertex {v + 1} colored twice")
        color_of[v] = c
    if k is None:
        raise ValueError("missing 's k f' header")
    if (color_of < 0).any():
        missing = int(np.flatnonzero(color_of < 0)[0]) + 1
        raise ValueError(f"vertex {missing} has no color")
    return Partition.from_assignment(graph, k, color_of)


def read_coloring(path, graph: Graph) -> Partition:
    return parse_coloring(Path(path).read_text(), graph)

"""Simple undirected graphs, DIMACS ``.col`` I/O and instance generators.

Vertices are ``0..n-1`` internally. DIMACS files use 1-based ids; conversion
happens only in :func:`parse_dimacs` and :func:`to_dimacs`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import numpy as np


class DimacsError(ValueError):
    """Malformed DIMACS input. ``lineno`` is 1-based, or None for whole-file problems."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple graph.

    Build one with :meth:`from_edges` rather than the raw constructor, which
    trusts that ``adjacency`` is already symmetric and loop-free.
    """

    n: int
    adjacency: tuple[frozenset[int], ...]
    name: str = ""

    @classmethod
    def from_edges(cls, n, edges, name=""):
        nbrs = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs), name)

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.array([len(a) for a in self.adjacency], dtype=np.int64)

    @cached_property
    def m(self) -> int:
        return int(self.degrees.sum()) // 2

    @cached_property
    def neighbors(self) -> tuple[np.ndarray, ...]:
        """Sorted neighbor arrays, for numpy fancy indexing."""
        return tuple(np.array(sorted(a), dtype=np.int64) for a in self.adjacency)

    @cached_property
    def adj_matrix(self) -> np.ndarray:
        mat = np.zeros((self.n, self.n), dtype=np.int32)
        for v, nb in enumerate(self.neighbors):
            mat[v, nb] = 1
        return mat

    def edges(self):
        """Yield each edge once as ``(u, v)`` with ``u < v``, sorted."""
        for u in range(self.n):
            for v in self.neighbors[u]:
                if v > u:
                    yield u, int(v)

    def has_edge(self, u, v) -> bool:
        return v in self.adjacency[u]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    __hash__ = None

    def __repr__(self):
        label = f"{self.name!r}, " if self.name else ""
        return f"Graph({label}n={self.n}, m={self.m})"


def max_degree(g: Graph) -> int:
    return int(g.degrees.max()) if g.n else 0


# --------------------------------------------------------------------------
# DIMACS


def parse_dimacs(text, name="") -> Graph:
    """Parse DIMACS ``.col`` text (a string or an iterable of lines).

    Duplicate edges, in either orientation, collapse into one. The edge count
    on the ``p`` line is ignored.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    n = None
    edges = []
    for lineno, raw in enumerate(lines, start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        tag = tokens[0]
        if tag == "p":
            if n is not None:
                raise DimacsError("duplicate problem line", lineno)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise DimacsError(f"malformed problem line {raw.strip()!r}", lineno)
            n = _int_token(tokens[2], lineno)
            _int_token(tokens[3], lineno)
            if n < 0:
                raise DimacsError("negative vertex count", lineno)
        elif tag == "e":
            if n is None:
                raise DimacsError("edge line before problem line", lineno)
            if len(tokens) != 3:
                raise DimacsError(f"malformed edge line {raw.strip()!r}", lineno)
            u, v = _int_token(tokens[1], lineno), _int_token(tokens[2], lineno)
            for x in (u, v):
                if not 1 <= x <= n:
                    raise DimacsError(f"vertex {x} outside 1..{n}", lineno)
            if u == v:
                raise DimacsError(f"self-loop on vertex {u}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise DimacsError(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise DimacsError("missing problem line")
    return Graph.from_edges(n, edges, name=name)


def _int_token(tok, lineno):
    try:
        return int(tok)
    except ValueError:
        raise DimacsError(f"expected an integer, got {tok!r}", lineno) from None


def read_dimacs(path) -> Graph:
    path = Path(path)
    with path.open() as fh:
        return parse_dimacs(fh, name=path.stem)


def to_dimacs(g: Graph) -> str:
    out = [f"p edge {g.n} {g.m}"]
    out.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def write_dimacs(g: Graph, path):
    Path(path).write_text(to_dimacs(g))


# --------------------------------------------------------------------------
# generators


def generate_kneser(a: int, b: int) -> Graph:
    """Kneser graph K(a, b): b-subsets of {1..a}, adjacent when disjoint.

    Vertices follow the lexicographic order of the subsets.
    """
    if not 1 <= b <= a:
        raise ValueError(f"invalid Kneser parameters a={a}, b={b}; need 1 <= b <= a")
    subsets = [frozenset(c) for c in itertools.combinations(range(1, a + 1), b)]
    edges = [
        (i, j)
        for i, j in itertools.combinations(range(len(subsets)), 2)
        if not subsets[i] & subsets[j]
    ]
    return Graph.from_edges(len(subsets), edges, name=f"kneser{a}_{b}")


def empty_graph(n) -> Graph:
    return Graph.from_edges(n, [], name=f"empty{n}")


def complete_graph(n) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2), name=f"K{n}")


def cycle_graph(n) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def path_graph(n) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], name=f"P{n}")


def star_graph(leaves) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)],
                            name=f"star{leaves}")


def random_graph(n, p, rng) -> Graph:
    """G(n, p) using a numpy Generator."""
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < p
    return Graph.from_edges(n, zip(iu[keep].tolist(), ju[keep].tolist()),
                            name=f"gnp{n}_{p}")


def mycielski(g: Graph) -> Graph:
    """Mycielskian of ``g``: copies ``n..2n-1`` and apex ``2n``."""
    n = g.n
    edges = list(g.edges())
    for u, v in g.edges():
        edges += [(u, n + v), (v, n + u)]
    edges += [(n + u, 2 * n) for u in range(n)]
    return Graph.from_edges(2 * n + 1, edges)


def myciel(order: int) -> Graph:
    """DIMACS ``myciel<order>``: ``order - 1`` Mycielskians applied to K2.

    ``myciel3`` is the Groetzsch graph (11 vertices, 20 edges).
    """
    if order < 2:
        raise ValueError("myciel order must be at least 2")
    g = complete_graph(2)
    for _ in range(order - 1):
        g = mycielski(g)
    return Graph(g.n, g.adjacency, name=f"myciel{order}")


def queen_graph(rows: int, cols: int) -> Graph:
    """Queen moves on a rows x cols board; square (r, c) is vertex r*cols + c."""
    cells = [(r, c) for r in range(rows) for c in range(cols)]
    edges = []
    for i, j in itertools.combinations(range(len(cells)), 2):
        (r1, c1), (r2, c2) = cells[i], cells[j]
        if r1 == r2 or c1 == c2 or abs(r1 - r2) == abs(c1 - c2):
            edges.append((i, j))
    return Graph.from_edges(len(cells), edges, name=f"queen{rows}_{cols}")


def full_insertion(g: Graph, k: int) -> Graph:
    """One step of the layered Mycielski-type construction with full insertion.

    Builds ``k + 2`` layers that copy the vertices of ``g``. Layer 0 keeps
    the edges of ``g``. A copy of ``u`` in layer ``t + 1`` is joined to the
    copies of ``u``'s neighbors in layer ``t``. One extra vertex per layer is
    joined to every vertex of its layer, and the extra vertices form a clique.
    """
    n, layers = g.n, k + 2
    vid = lambda u, t: t * n + u  # noqa: E731
    apex = [layers * n + t for t in range(layers)]
    edges = list(g.edges())
    for t in range(layers - 1):
        for u, v in g.edges():
            edges += [(vid(u, t + 1), vid(v, t)), (vid(v, t + 1), vid(u, t))]
    for t in range(layers):
        edges += [(vid(u, t), apex[t]) for u in range(n)]
    edges += list(itertools.combinations(apex, 2))
    return Graph.from_edges(layers * (n + 1), edges)


def full_ins(k: int, order: int) -> Graph:
    """Reconstruction of the DIMACS ``<k>-FullIns_<order>`` family.

    Applies :func:`full_insertion` ``order - 1`` times starting from K2. The
    vertex and edge counts agree with every published member of the family
    (e.g. 2-FullIns_3: 52/201, 4-FullIns_5: 4146/77305), but the graphs are
    not checked for isomorphism against the original files.
    """
    g = complete_graph(2)
    for _ in range(order - 1):
        g = full_insertion(g, k)
    return Graph(g.n, g.adjacency, name=f"{k}-FullIns_{order}")

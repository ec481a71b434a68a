"""Benchmark harness: single runs recorded as CSV rows, and (alpha, beta) sweeps
laid out as a matrix with success/time/residual footers."""

from __future__ import annotations

import csv
import io
import itertools
import string
from dataclasses import astuple, dataclass, fields
from pathlib import Path

from .construct import make_rng, procedure1
from .driver import DEFAULT_ITERATION_CAP, solve_descending
from .graph import DimacsError, Graph, read_dimacs
from .partition import Partition
from .tabu import StopCondition, TenureParams, tabu_eqcol

DEFAULT_TIME = 3600.0
QUICK_TIME = 30.0


@dataclass
class RunRecord:
    instance: str
    n: int
    m: int
    lb: int
    alpha: float
    beta: int
    seed: int
    k: int
    solved: bool
    residual: int
    iters: int
    seconds: float

    @classmethod
    def columns(cls) -> list[str]:
        return [f.name for f in fields(cls)]

    def row(self, timing=True) -> list[str]:
        vals = astuple(self)
        out = [str(v) for v in vals[:-1]]
        out.append(f"{self.seconds:.3f}" if timing else "")
        return out


def csv_text(records, header=True, timing=True) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if header:
        w.writerow(RunRecord.columns())
    for rec in records:
        w.writerow(rec.row(timing))
    return buf.getvalue()


def append_csv(path, records, timing=True):
    path = Path(path)
    new = not path.exists() or path.stat().st_size == 0
    with path.open("a") as fh:
        fh.write(csv_text(records, header=new, timing=timing))


def run_instance(graph: Graph, lb=1, k=None, params=TenureParams(), time_limit=DEFAULT_TIME,
                 iterations=None, seed=0, restarts=None) -> tuple[RunRecord, Partition]:
    """One benchmark run; returns the CSV record and the coloring to save.

    With ``k`` the search runs once at that k from a greedy start (``solved``
    means a k-eqcol was found). Without it the descending protocol runs and
    ``solved`` means the lower bound was reached; ``iterations`` then caps
    each individual search, ``restarts`` bounds the repeated searches at a
    failing k, and ``iters`` counts all searches, restarts included.
    """
    rng = make_rng(seed)
    if k is not None:
        if not 1 <= k <= graph.n:
            raise ValueError(f"k={k} outside 1..{graph.n}")
        s0 = procedure1(graph, k, rng)
        res = tabu_eqcol(graph, k, s0, params, StopCondition(iterations, time_limit), rng)
        rec = RunRecord(graph.name, graph.n, graph.m, lb, params.alpha, params.beta, seed,
                        k, res.solved, res.best_objective, res.iterations_run, res.elapsed)
        return rec, res.best

    rep = solve_descending(graph, lb, params, time_limit, rng,
                           iteration_cap=iterations or DEFAULT_ITERATION_CAP,
                           max_restarts=restarts)
    solved = rep.best_k <= lb
    failed = [r for _, r in rep.schedule if not r.solved]
    residual = 0 if solved or not failed else failed[-1].best_objective
    iters = rep.total_iterations
    rec = RunRecord(graph.name, graph.n, graph.m, lb, params.alpha, params.beta, seed,
                    rep.best_k, solved, residual, iters, rep.total_elapsed)
    return rec, rep.best_coloring


# --------------------------------------------------------------------------
# sweeps


def column_labels(count):
    letters = string.ascii_uppercase
    if count <= len(letters):
        return list(letters[:count])
    return ["".join(p) for p in itertools.islice(
        itertools.chain(letters, itertools.product(letters, repeat=2)), count)]


@dataclass
class SweepTable:
    combos: list[tuple[float, int]]
    labels: list[str]
    instances: list[tuple[str, int, int, int]]  # name, n, m, k
    cells: list[list[RunRecord]]  # cells[instance][combo]

    def column(self, j):
        return [row[j] for row in self.cells if j < len(row)]

    def residual_sum(self, j) -> int:
        return sum(r.residual for r in self.column(j) if not r.solved)

    def success_rate(self, j) -> float:
        col = self.column(j)
        return 100.0 * sum(r.solved for r in col) / len(col) if col else 0.0

    def mean_time(self, j):
        times = [r.seconds for r in self.column(j) if r.solved]
        return sum(times) / len(times) if times else None

    def records(self):
        return [r for row in self.cells for r in row]

    def render(self) -> str:
        head = ["instance", "|V|", "|E|", "k"] + self.labels
        rows = [head, ["", "", "", ""] + [f"a={a:g},b={b}" for a, b in self.combos]]
        for (name, n, m, k), cells in zip(self.instances, self.cells):
            rows.append([name, str(n), str(m), str(k)]
                        + [f"{c.seconds:.2f}" if c.solved else f"{{{c.residual}}}" for c in cells])
        ncol = len(self.combos)
        mean = [self.mean_time(j) for j in range(ncol)]
        rows.append(["Sum of objective values", "", "", ""]
                    + [str(self.residual_sum(j)) for j in range(ncol)])
        rows.append(["Success", "", "", ""]
                    + [f"{self.success_rate(j):.0f}%" for j in range(ncol)])
        rows.append(["Average Time", "", "", ""]
                    + ["-" if t is None else f"{t:.2f}" for t in mean])
        width = [max(len(r[i]) if i < len(r) else 0 for r in rows) for i in range(len(head))]
        return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, width)).rstrip()
                         for r in rows) + "\n"


class SweepAborted(RuntimeError):
    def __init__(self, message, table):
        super().__init__(message)
        self.table = table


def read_instance_list(path):
    """Lines ``<col file> <k> [<lower bound>]``; ``#`` starts a comment.

    Relative paths are resolved against the list file's directory.
    """
    path = Path(path)
    out = []
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        if len(line) not in (2, 3):
            raise ValueError(f"{path}:{lineno}: expected '<file> <k> [<lb>]'")
        entry = [path.parent / line[0], int(line[1])]
        entry.append(int(line[2]) if len(line) == 3 else 1)
        out.append(tuple(entry))
    return out


def run_sweep(instances, alphas, betas, time_limit=DEFAULT_TIME, iterations=None,
              seed=0) -> SweepTable:
    """Fixed-k runs for every (instance, alpha, beta) cell.

    ``instances`` holds ``(graph_or_path, k, lb)`` tuples. All cells of one
    instance start from the same greedy solution and the same seed. If an
    instance file cannot be read, :class:`SweepAborted` carries the cells
    completed so far.
    """
    if not instances or not alphas or not betas:
        raise ValueError("sweep needs at least one instance, alpha and beta")
    combos = list(itertools.product(alphas, betas))
    table = SweepTable(combos, column_labels(len(combos)), [], [])
    for src, k, lb in instances:
        if isinstance(src, Graph):
            graph = src
        else:
            try:
                graph = read_dimacs(src)
            except (OSError, DimacsError) as exc:
                raise SweepAborted(f"cannot load {src}: {exc}", table) from exc
        s0 = procedure1(graph, k, make_rng(seed))
        row = []
        table.instances.append((graph.name, graph.n, graph.m, k))
        table.cells.append(row)
        for alpha, beta in combos:
            params = TenureParams(alpha, beta)
            res = tabu_eqcol(graph, k, s0, params, StopCondition(iterations, time_limit),
                             make_rng(seed))
            row.append(RunRecord(graph.name, graph.n, graph.m, lb, alpha, beta, seed, k,
                                 res.solved, res.best_objective, res.iterations_run,
                                 res.elapsed))
    return table

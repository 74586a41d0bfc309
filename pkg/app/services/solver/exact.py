from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional

from app.common.exceptions import BudgetExceededError, UnsupportedGraphError
from app.config.config import settings
from app.config.logging import logger
from app.schemas.solver_schemas import SolveResultResponse, SolveStatus
from app.services.graph.analysis import bipartition, chromatic_number, single_edge_components
from app.services.graph.graph import Graph
from app.services.labeling.labeling import EdgeLabeling
from app.services.labeling.lemmas import two_color_admissible


@dataclass(frozen=True)
class SolveResult:
    status: SolveStatus
    chi_la: Optional[int]
    witness: Optional[EdgeLabeling]
    nodes_explored: int
    lower_bound: int
    upper_bound: Optional[int] = None

    def to_response(self) -> SolveResultResponse:
        return SolveResultResponse(
            status=self.status,
            chi_la=self.chi_la,
            lower_bound=self.lower_bound,
            upper_bound=self.upper_bound,
            nodes_explored=self.nodes_explored,
            witness=self.witness.to_payload(proper=True) if self.witness else None,
        )


def check_solvable(g: Graph) -> bool:
    """False when some component is a single edge; raises on isolated vertices."""
    if g.vertex_count == 0 or g.q == 0:
        raise UnsupportedGraphError("graph has no edges")
    isolated = [v for v, d in enumerate(g.degrees) if d == 0]
    if isolated:
        raise UnsupportedGraphError(f"isolated vertices are not supported: {isolated}")
    return not single_edge_components(g)


def lower_bound(g: Graph) -> int:
    """chi(G), raised to 3 when the two-color balance identity cannot hold."""
    try:
        bound = chromatic_number(g)
    except BudgetExceededError:
        bound = 2 if bipartition(g) is not None else 3
    if bound < 3 and not two_color_admissible(g):
        bound = 3
    return bound


class _Search:
    """
    Depth-first label assignment in canonical edge order, labels ascending.

    A node is one label placed on one edge. A branch is cut when a vertex whose
    edges are all labeled matches a finished neighbor, or when the finished
    vertices already show as many colors as the best labeling found.
    """

    def __init__(self, g: Graph, lower: int, budget: int):
        self.g = g
        self.lower = lower
        self.budget = budget
        self.q = g.q
        self.labels = [0] * g.q
        self.used = [False] * (g.q + 1)
        self.sums = [0] * g.vertex_count
        self.remaining = list(g.degrees)
        self.finished = [False] * g.vertex_count
        self.colors: dict[int, int] = {}
        self.best: int | None = None
        self.best_labels: tuple[int, ...] | None = None
        self.nodes = 0
        self.exceeded = False
        self.done = False

    def run(self, root_labels: Iterable[int]) -> None:
        for label in root_labels:
            self._place(0, label)
            if self.done or self.exceeded:
                return

    def _descend(self, depth: int) -> None:
        if depth == self.q:
            count = len(self.colors)
            if self.best is None or count < self.best:
                self.best = count
                self.best_labels = tuple(self.labels)
                self.done = count <= self.lower
            return
        for label in range(1, self.q + 1):
            if self.used[label]:
                continue
            self._place(depth, label)
            if self.done or self.exceeded:
                return

    def _place(self, depth: int, label: int) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            self.exceeded = True
            return

        u, v = self.g.edges[depth]
        self.labels[depth] = label
        self.used[label] = True
        self.sums[u] += label
        self.sums[v] += label
        self.remaining[u] -= 1
        self.remaining[v] -= 1

        closed: list[int] = []
        clash = False
        for x in (u, v):
            if self.remaining[x]:
                continue
            total = self.sums[x]
            if any(self.finished[y] and self.sums[y] == total for y in self.g.adjacency[x]):
                clash = True
                break
            self.finished[x] = True
            self.colors[total] = self.colors.get(total, 0) + 1
            closed.append(x)

        if not clash and (self.best is None or len(self.colors) < self.best):
            self._descend(depth + 1)

        for x in closed:
            self.finished[x] = False
            total = self.sums[x]
            self.colors[total] -= 1
            if not self.colors[total]:
                del self.colors[total]
        self.remaining[u] += 1
        self.remaining[v] += 1
        self.sums[u] -= label
        self.sums[v] -= label
        self.used[label] = False
        self.labels[depth] = 0


def root_labels(g: Graph) -> list[int]:
    # complementing a labeling of a regular graph keeps it proper with the same colors
    top = (g.q + 1) // 2 if g.is_regular else g.q
    return list(range(1, top + 1))


def _run_branch(
    g: Graph, roots: list[int], lower: int, budget: int
) -> tuple[int | None, tuple[int, ...] | None, int, bool]:
    search = _Search(g, lower, budget)
    search.run(roots)
    return search.best, search.best_labels, search.nodes, search.exceeded


def _merge_branches(
    results: list[tuple[int | None, tuple[int, ...] | None, int, bool]], lower: int
) -> tuple[int | None, tuple[int, ...] | None, int, bool]:
    """Walk branches by root label; the first minimum wins."""
    best: int | None = None
    best_labels: tuple[int, ...] | None = None
    nodes = sum(r[2] for r in results)
    for count, labels, _, exceeded in results:
        if best is not None and best <= lower:
            break
        if count is not None and (best is None or count < best):
            best, best_labels = count, labels
        if exceeded and not (best is not None and best <= lower):
            return best, best_labels, nodes, True
    return best, best_labels, nodes, False


def chi_la_exact(
    g: Graph, budget: Optional[int] = None, workers: Optional[int] = None
) -> SolveResult:
    """
    Exact local antimagic chromatic number by exhaustive labeled search.

    The witness is the lexicographically least optimal labeling in canonical
    edge order. With `workers` > 1 the root branches run in separate processes,
    each with an equal share of the node budget; answers match the sequential
    run while node counts may differ.
    """
    budget = budget if budget is not None else settings.SOLVER_NODE_BUDGET
    workers = workers if workers is not None else settings.SOLVER_WORKERS

    if not check_solvable(g):
        logger.info("solver_undefined", graph=g.name, reason="single-edge component")
        return SolveResult(
            status=SolveStatus.UNDEFINED_NO_LABELING,
            chi_la=None,
            witness=None,
            nodes_explored=0,
            lower_bound=0,
        )

    lower = lower_bound(g)
    roots = root_labels(g)
    logger.debug("solver_started", graph=g.name, p=g.p, q=g.q, lower=lower, workers=workers)

    if workers > 1 and len(roots) > 1:
        share = max(1, budget // len(roots))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_run_branch, g, [r], lower, share) for r in roots]
            best, best_labels, nodes, exceeded = _merge_branches(
                [f.result() for f in futures], lower
            )
    else:
        best, best_labels, nodes, exceeded = _run_branch(g, roots, lower, budget)

    witness = EdgeLabeling(g, best_labels) if best_labels is not None else None
    if exceeded:
        status, chi = SolveStatus.BUDGET_EXCEEDED, None
        logger.warning("solver_budget_exceeded", graph=g.name, budget=budget, best=best)
    elif best is None:
        status, chi = SolveStatus.UNDEFINED_NO_LABELING, None
    else:
        status, chi = SolveStatus.EXACT, best

    logger.info(
        "solver_finished",
        graph=g.name,
        status=status.value,
        chi_la=chi,
        nodes=nodes,
        lower=lower,
    )
    return SolveResult(
        status=status,
        chi_la=chi,
        witness=witness,
        nodes_explored=nodes,
        lower_bound=lower,
        upper_bound=best,
    )

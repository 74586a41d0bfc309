from __future__ import annotations

from itertools import permutations
from typing import Optional

from app.common.exceptions import BudgetExceededError
from app.config.config import settings
from app.config.logging import logger
from app.schemas.solver_schemas import SolveStatus
from app.services.graph.graph import Graph
from app.services.labeling.labeling import EdgeLabeling
from app.services.solver.exact import SolveResult, check_solvable


def naive_chi_la(g: Graph, max_edges: Optional[int] = None) -> SolveResult:
    """Try every bijection in lexicographic order; no pruning, no bounds."""
    limit = max_edges if max_edges is not None else settings.ORACLE_MAX_EDGES
    if g.q > limit:
        raise BudgetExceededError(f"oracle enumerates at most {limit} edges, got {g.q}")
    if not check_solvable(g):
        return SolveResult(
            status=SolveStatus.UNDEFINED_NO_LABELING,
            chi_la=None,
            witness=None,
            nodes_explored=0,
            lower_bound=0,
        )

    best: int | None = None
    best_labels: tuple[int, ...] | None = None
    tried = 0
    for labels in permutations(range(1, g.q + 1)):
        tried += 1
        sums = [0] * g.vertex_count
        for (u, v), label in zip(g.edges, labels):
            sums[u] += label
            sums[v] += label
        if any(sums[u] == sums[v] for u, v in g.edges):
            continue
        count = len(set(sums))
        if best is None or count < best:
            best, best_labels = count, labels

    logger.debug("oracle_finished", graph=g.name, q=g.q, chi_la=best, tried=tried)
    if best is None:
        return SolveResult(
            status=SolveStatus.UNDEFINED_NO_LABELING,
            chi_la=None,
            witness=None,
            nodes_explored=tried,
            lower_bound=0,
        )
    return SolveResult(
        status=SolveStatus.EXACT,
        chi_la=best,
        witness=EdgeLabeling(g, best_labels),
        nodes_explored=tried,
        lower_bound=0,
        upper_bound=best,
    )

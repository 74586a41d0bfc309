from __future__ import annotations

from typing import Callable, Optional

from app.common.exceptions import AntimagicError, BudgetExceededError
from app.config.config import settings
from app.config.logging import logger
from app.schemas.construction_schemas import PartsDescriptor
from app.schemas.solver_schemas import BoundsResponse, SolveStatus
from app.services.constructions.bipartite import bipartite_regular_labeling
from app.services.constructions.lexicographic import lex_labeling
from app.services.constructions.tripartite import tripartite_labeling, validate_tripartite
from app.services.graph.analysis import bipartition, chromatic_number
from app.services.graph.graph import Graph
from app.services.labeling.labeling import EdgeLabeling
from app.services.labeling.lemmas import two_color_admissible
from app.services.labeling.verifier import verify
from app.services.solver.exact import chi_la_exact


def _lower(g: Graph) -> tuple[int, list[str]]:
    provenance: list[str] = []
    try:
        bound = chromatic_number(g)
        provenance.append("chromatic_number")
    except BudgetExceededError:
        bound = 2 if bipartition(g) is not None else 3
        provenance.append("bipartiteness")
    if bound < 3 and g.q and min(g.degrees) > 0 and not two_color_admissible(g):
        bound = 3
        provenance.append("two_color_balance")
    return bound, provenance


def chi_la_bounds(
    g: Graph,
    parts: Optional[PartsDescriptor] = None,
    lex_base: Optional[tuple[EdgeLabeling, int]] = None,
    solver_max_edges: Optional[int] = None,
) -> BoundsResponse:
    """
    Lower bound from chi(G) and the two-color balance identity; upper bound from
    whichever construction applies, each verified before it counts.

    `lex_base` is (labeling of G', n) with G = G'[O_n]; `parts` describes a
    tripartite instance. Small graphs are also searched exactly.
    """
    lower, lower_provenance = _lower(g)
    limit = solver_max_edges if solver_max_edges is not None else settings.BOUNDS_SOLVER_MAX_EDGES

    builders: dict[str, Callable[[], EdgeLabeling]] = {
        "bipartite_tour": lambda: bipartite_regular_labeling(g),
    }
    if parts is not None:
        builders["tripartite_tour"] = lambda: tripartite_labeling(validate_tripartite(g, parts))
    if lex_base is not None:
        base, n = lex_base
        builders["lex_blow_up"] = lambda: lex_labeling(base.graph, base, n)

    candidates: dict[str, int] = {}
    for name, build in builders.items():
        try:
            f = build()
        except AntimagicError as exc:
            logger.debug("bound_construction_skipped", construction=name, reason=str(exc))
            continue
        if f.graph != g:
            logger.debug("bound_construction_skipped", construction=name, reason="different graph")
            continue
        report = verify(g, f)
        if report.is_local_antimagic:
            candidates[name] = report.color_count

    if 0 < g.q <= limit:
        try:
            result = chi_la_exact(g)
        except AntimagicError as exc:
            logger.debug("bound_search_skipped", reason=str(exc))
            result = None
        if result is not None and result.status == SolveStatus.EXACT and result.chi_la is not None:
            candidates["exact_search"] = result.chi_la
            if result.chi_la > lower:
                lower = result.chi_la
                lower_provenance.append("exact_search")

    upper_provenance = min(candidates, key=candidates.get) if candidates else None
    upper = candidates[upper_provenance] if upper_provenance else None
    logger.debug(
        "bounds_computed",
        graph=g.name,
        lower=lower,
        upper=upper,
        upper_provenance=upper_provenance,
    )
    return BoundsResponse(
        lower=lower,
        upper=upper,
        lower_provenance=lower_provenance,
        upper_provenance=upper_provenance,
        candidates=candidates,
    )

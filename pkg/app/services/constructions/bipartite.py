from __future__ import annotations

from typing import Optional

from app.common.exceptions import ConstructionPreconditionError, InternalInvariantError
from app.config.logging import logger
from app.services.constructions.cycle import TourLabeling, label_along_tour, position_weight
from app.services.graph.analysis import bipartition, euler_tour, is_connected
from app.services.graph.graph import Graph
from app.services.labeling.labeling import EdgeLabeling
from app.services.labeling.verifier import verify


def bipartite_expected_colors(q: int, m: int) -> list[int]:
    """Colors of the tour labeling on a connected 2m-regular bipartite graph."""
    # each side of the bipartition is met only at positions of one parity;
    # the start vertex also closes the tour at position 1
    odd, even = position_weight(3, q), position_weight(2, q)
    return sorted({position_weight(1, q) + (m - 1) * odd, m * even, m * odd})


def _half_degree(g: Graph) -> int:
    if not is_connected(g):
        raise ConstructionPreconditionError("graph must be connected")
    degree = g.regular_degree
    if degree is None or degree == 0 or degree % 2:
        raise ConstructionPreconditionError("graph must be 2m-regular with m >= 1")
    if bipartition(g) is None:
        raise ConstructionPreconditionError("graph must be bipartite")
    return degree // 2


def bipartite_regular_construction(
    g: Graph, start_edge: Optional[int] = None
) -> TourLabeling:
    m = _half_degree(g)
    tour = euler_tour(g, start_edge=start_edge)
    f = label_along_tour(g, tour)

    report = verify(g, f)
    expected = bipartite_expected_colors(g.q, m)
    if not report.is_local_antimagic or report.colors != expected:
        logger.error(
            "bipartite_labeling_invalid",
            q=g.q,
            m=m,
            colors=report.colors,
            expected=expected,
        )
        raise InternalInvariantError(
            f"tour labeling gave colors {report.colors}, expected {expected}"
        )

    logger.debug(
        "bipartite_labeling_built",
        graph=g.name,
        q=g.q,
        m=m,
        colors=report.colors,
        first_edge=tour.edge_indices[0],
    )
    return TourLabeling(tour=tour, labeling=f)


def bipartite_regular_labeling(g: Graph, start_edge: Optional[int] = None) -> EdgeLabeling:
    """
    Label a connected 2m-regular bipartite graph along an Euler tour.

    The first tour edge (`start_edge` when given) carries label q, and the result
    has exactly three colors.
    """
    return bipartite_regular_construction(g, start_edge).labeling

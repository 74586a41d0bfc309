from __future__ import annotations

from dataclasses import dataclass

from app.common.exceptions import InvalidSpecError
from app.services.graph.families import cycle
from app.services.graph.graph import EulerTour, Graph
from app.services.labeling.labeling import EdgeLabeling


@dataclass(frozen=True)
class TourLabeling:
    tour: EulerTour
    labeling: EdgeLabeling


def cycle_pattern(q: int) -> tuple[int, ...]:
    """Labels of e_1..e_q along a closed walk: e_{2j-1} -> q+1-j, e_{2j} -> j."""
    return tuple(
        q + 1 - (i + 1) // 2 if i % 2 else i // 2 for i in range(1, q + 1)
    )


def position_weight(position: int, q: int) -> int:
    """What one visit at 1-based `position` contributes to its vertex."""
    if position == 1:
        return 2 * q - q // 2
    return q + 1 if position % 2 == 0 else q


def label_along_tour(g: Graph, tour: EulerTour) -> EdgeLabeling:
    labels = [0] * g.q
    for edge, label in zip(tour.edge_indices, cycle_pattern(g.q)):
        labels[edge] = label
    return EdgeLabeling(g, tuple(labels))


def cycle_labeling(n: int) -> EdgeLabeling:
    """Labeling of C_n with sums 2n - n//2 at x_1, n+1 at even x_i, n at odd x_i."""
    if n < 3:
        raise InvalidSpecError(f"cycle labeling needs n >= 3, got {n}")
    g = cycle(n)
    tour = EulerTour(
        vertices=tuple(range(n)),
        edge_indices=tuple(g.edge_id(i, (i + 1) % n) for i in range(n)),
    )
    return label_along_tour(g, tour)

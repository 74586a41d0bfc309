from __future__ import annotations

from app.common.exceptions import MalformedLabelingError
from app.schemas.labeling_schemas import VerificationReport
from app.services.graph.analysis import single_edge_components
from app.services.graph.graph import Graph
from app.services.labeling.labeling import EdgeLabeling


def verify(g: Graph, f: EdgeLabeling) -> VerificationReport:
    """
    Check that f is a bijection onto [1, q] and that adjacent vertices get
    different sums. Sums are recomputed here rather than read from `f`.
    """
    if f.graph != g:
        raise MalformedLabelingError("labeling is defined on a different edge set")

    sums = [0] * g.vertex_count
    for (u, v), label in zip(g.edges, f.labels):
        sums[u] += label
        sums[v] += label

    violations = [(u, v) for u, v in g.edges if sums[u] == sums[v]]
    colors = sorted(set(sums)) if g.vertex_count else []

    return VerificationReport(
        is_bijection=sorted(f.labels) == list(range(1, g.q + 1)),
        is_proper=not violations,
        colors=colors,
        color_count=len(colors),
        violations=violations,
        vertex_sums=sums,
        chi_la_defined=not single_edge_components(g),
    )


def is_local_antimagic(g: Graph, f: EdgeLabeling) -> bool:
    return verify(g, f).is_local_antimagic

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from app.common.exceptions import (
    DecompositionError,
    InternalInvariantError,
    TripartiteConditionError,
)
from app.config.logging import logger
from app.schemas.construction_schemas import PartsDescriptor, TrailKind, TripartiteParity
from app.services.constructions.cycle import TourLabeling, label_along_tour
from app.services.graph.analysis import bipartition, euler_tour, is_connected
from app.services.graph.graph import EulerTour, Graph
from app.services.labeling.labeling import EdgeLabeling
from app.services.labeling.verifier import verify


@dataclass(frozen=True)
class TripartiteStructure:
    """
    Hub w plus parts V2, V3 (independent sets, at least two vertices each).

    V2 vertices have degree 2m and V3 vertices degree 2n. The hub meets 2a
    vertices of V2 and 2b of V3 (even parity) or 2a+1 and 2b+1 (odd parity).
    """

    graph: Graph
    w: int
    V2: tuple[int, ...]
    V3: tuple[int, ...]
    a: int
    b: int
    m: int
    n: int
    parity: TripartiteParity

    @property
    def x(self) -> int:
        return len(self.V2)

    @property
    def y(self) -> int:
        return len(self.V3)

    @property
    def q(self) -> int:
        return self.graph.q

    @cached_property
    def part_of(self) -> dict[int, int]:
        """Vertex -> 1, 2 or 3."""
        return {self.w: 1} | {v: 2 for v in self.V2} | {v: 3 for v in self.V3}

    def expected_colors(self) -> dict[str, int]:
        q = self.q
        hub_visits = self.a + self.b + (1 if self.parity == TripartiteParity.ODD else 0)
        return {
            "V2": self.m * (q + 1),
            "V3": self.n * q,
            "hub": hub_visits * (q + 1) + self.n * self.y,
        }


def _fail(condition: str, message: str) -> TripartiteConditionError:
    logger.warning("tripartite_condition_failed", condition=condition, detail=message)
    return TripartiteConditionError(condition, message)


def _common_half_degree(g: Graph, part: tuple[int, ...], label: str) -> int:
    degrees = {g.degree(v) for v in part}
    if len(degrees) != 1:
        raise _fail(f"{label}_degree", f"{label} degrees differ: {sorted(degrees)}")
    degree = degrees.pop()
    if degree == 0 or degree % 2:
        raise _fail(f"{label}_degree", f"{label} degree must be a positive even number, got {degree}")
    return degree // 2


def validate_tripartite(g: Graph, parts: PartsDescriptor) -> TripartiteStructure:
    w, V2, V3 = parts.w, tuple(sorted(parts.V2)), tuple(sorted(parts.V3))

    everything = [w, *V2, *V3]
    if sorted(everything) != list(range(g.vertex_count)):
        raise _fail("partition", "w, V2 and V3 must partition the vertex set exactly once")
    if len(V2) < 2 or len(V3) < 2:
        raise _fail("part_size", f"|V2| = {len(V2)} and |V3| = {len(V3)} must both be >= 2")

    for label, part in (("V2", set(V2)), ("V3", set(V3))):
        inside = [(u, v) for u, v in g.edges if u in part and v in part]
        if inside:
            raise _fail("independent", f"{label} is not independent: edge {inside[0]}")
    if not is_connected(g):
        raise _fail("connected", "graph must be connected")

    m = _common_half_degree(g, V2, "V2")
    n = _common_half_degree(g, V3, "V3")

    hub_v2 = sum(1 for v in g.adjacency[w] if v in set(V2))
    hub_v3 = g.degree(w) - hub_v2
    if hub_v2 % 2 == 0 and hub_v3 % 2 == 0:
        parity, a, b, extra = TripartiteParity.EVEN, hub_v2 // 2, hub_v3 // 2, 0
    elif hub_v2 % 2 == 1 and hub_v3 % 2 == 1:
        parity, a, b, extra = TripartiteParity.ODD, (hub_v2 - 1) // 2, (hub_v3 - 1) // 2, 1
    else:
        raise _fail(
            "hub_degree",
            f"hub meets {hub_v2} vertices of V2 and {hub_v3} of V3; both must be even or both odd",
        )

    if bipartition(g) is not None:
        raise _fail("non_bipartite", "graph is bipartite, so its chromatic number is 2")

    if not g.q == 2 * m * len(V2) + 2 * b + extra == 2 * n * len(V3) + 2 * a + extra:
        raise _fail(
            "size_identity",
            f"q = {g.q} does not match 2m|V2| + 2b (+1) = {2 * m * len(V2) + 2 * b + extra} "
            f"and 2n|V3| + 2a (+1) = {2 * n * len(V3) + 2 * a + extra}",
        )

    structure = TripartiteStructure(
        graph=g, w=w, V2=V2, V3=V3, a=a, b=b, m=m, n=n, parity=parity
    )
    logger.debug(
        "tripartite_validated",
        parity=parity.value,
        a=a,
        b=b,
        m=m,
        n=n,
        x=len(V2),
        y=len(V3),
        q=g.q,
    )
    return structure


# ------------------------- trails ------------------------- #


@dataclass(frozen=True)
class Trail:
    """Closed trail w ... w meeting the hub only at its ends."""

    kind: TrailKind
    vertices: tuple[int, ...]
    edge_indices: tuple[int, ...]

    def reversed(self) -> "Trail":
        return Trail(self.kind, self.vertices[::-1], self.edge_indices[::-1])

    @property
    def second(self) -> int:
        return self.vertices[1]


@dataclass(frozen=True)
class TrailDecomposition:
    hub: int
    trails: tuple[Trail, ...]
    alpha: int
    beta: int
    gamma: int

    def tour(self) -> EulerTour:
        vertices: list[int] = []
        edges: list[int] = []
        for trail in self.trails:
            vertices.extend(trail.vertices[:-1])
            edges.extend(trail.edge_indices)
        return EulerTour(vertices=tuple(vertices), edge_indices=tuple(edges))


def _split_at_hub(tour: EulerTour, hub: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    walk = tour.closed_walk()
    cuts = [i for i, v in enumerate(walk) if v == hub]
    return [
        (walk[start : end + 1], tour.edge_indices[start:end])
        for start, end in zip(cuts, cuts[1:])
    ]


def _classify(vertices: tuple[int, ...], s: TripartiteStructure) -> TrailKind:
    ends = {s.part_of[vertices[1]], s.part_of[vertices[-2]]}
    if ends == {2}:
        return TrailKind.R
    if ends == {3}:
        return TrailKind.S
    return TrailKind.T


def _check_arrangement(tour: EulerTour, s: TripartiteStructure) -> None:
    walk = tour.closed_walk()
    for i in range(1, len(walk) - 1):
        if walk[i] == s.w and s.part_of[walk[i - 1]] != s.part_of[walk[i + 1]]:
            raise DecompositionError(
                f"hub visit at position {i + 1} is flanked by different parts"
            )
    for position, v in enumerate(tour.vertices, start=1):
        part = s.part_of[v]
        if (part == 2 and position % 2) or (part == 3 and position % 2 == 0):
            raise DecompositionError(f"vertex {v} of V{part} sits at position {position}")


def trail_decomposition(tour: EulerTour, s: TripartiteStructure) -> TrailDecomposition:
    """
    Cut a hub-anchored tour into closed trails and rearrange them.

    Even parity: R.. T_1..T_{gamma-1} S.. T_gamma. Odd parity: R.. T_1..T_gamma S..
    T_k starts with a V2 vertex for odd k and with a V3 vertex for even k.
    """
    if tour.start != s.w:
        raise DecompositionError(f"tour starts at {tour.start}, not at the hub {s.w}")

    pieces = [
        Trail(_classify(vertices, s), vertices, edges)
        for vertices, edges in _split_at_hub(tour, s.w)
    ]
    r_trails = [t for t in pieces if t.kind == TrailKind.R]
    s_trails = [t for t in pieces if t.kind == TrailKind.S]
    t_trails = [t for t in pieces if t.kind == TrailKind.T]
    alpha, beta, gamma = len(r_trails), len(s_trails), len(t_trails)

    extra = 1 if s.parity == TripartiteParity.ODD else 0
    if 2 * alpha + gamma != 2 * s.a + extra or 2 * beta + gamma != 2 * s.b + extra:
        raise InternalInvariantError(
            f"trail counts alpha={alpha}, beta={beta}, gamma={gamma} "
            f"disagree with a={s.a}, b={s.b}"
        )
    if gamma == 0:
        raise DecompositionError("tour has no trail leaving the hub into both parts")

    oriented = []
    for k, trail in enumerate(t_trails, start=1):
        wanted = 2 if k % 2 else 3
        oriented.append(trail if s.part_of[trail.second] == wanted else trail.reversed())

    if s.parity == TripartiteParity.EVEN:
        arranged = r_trails + oriented[:-1] + s_trails + oriented[-1:]
    else:
        arranged = r_trails + oriented + s_trails

    decomposition = TrailDecomposition(
        hub=s.w, trails=tuple(arranged), alpha=alpha, beta=beta, gamma=gamma
    )
    _check_arrangement(decomposition.tour(), s)
    return decomposition


def _hub_tours(s: TripartiteStructure):
    yield euler_tour(s.graph, start_vertex=s.w)
    for edge in s.graph.incidence[s.w]:
        yield euler_tour(s.graph, start_edge=edge, start_vertex=s.w)


def tripartite_construction(s: TripartiteStructure) -> tuple[TrailDecomposition, TourLabeling]:
    """Rearranged tour and its labeling; retries tours anchored on each hub edge."""
    decomposition = None
    for attempt, tour in enumerate(_hub_tours(s)):
        try:
            decomposition = trail_decomposition(tour, s)
            break
        except DecompositionError as exc:
            logger.info("tripartite_tour_rejected", attempt=attempt, reason=str(exc))
    if decomposition is None:
        raise DecompositionError("no hub-anchored Euler tour admits the trail arrangement")

    tour = decomposition.tour()
    f = label_along_tour(s.graph, tour)

    report = verify(s.graph, f)
    expected = s.expected_colors()
    if not report.is_local_antimagic or report.colors != sorted(set(expected.values())):
        logger.error(
            "tripartite_labeling_invalid",
            colors=report.colors,
            expected=expected,
            violations=report.violations,
        )
        raise InternalInvariantError(
            f"tripartite labeling gave colors {report.colors}, expected {expected}"
        )

    logger.debug(
        "tripartite_labeling_built",
        parity=s.parity.value,
        alpha=decomposition.alpha,
        beta=decomposition.beta,
        gamma=decomposition.gamma,
        colors=report.colors,
    )
    return decomposition, TourLabeling(tour=tour, labeling=f)


def tripartite_labeling(s: TripartiteStructure) -> EdgeLabeling:
    return tripartite_construction(s)[1].labeling

from __future__ import annotations

from collections import deque
from typing import Optional

import networkx as nx

from app.common.exceptions import (
    BudgetExceededError,
    InternalInvariantError,
    InvalidGraphError,
    NotEulerianError,
)
from app.config.config import settings
from app.config.logging import logger
from app.schemas.graph_schemas import GraphAnalysisResponse
from app.services.graph.graph import EulerTour, Graph


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by their smallest vertex."""
    components = [sorted(c) for c in nx.connected_components(g.to_networkx())]
    return sorted(components, key=lambda c: c[0])


def is_connected(g: Graph) -> bool:
    return g.vertex_count > 0 and len(connected_components(g)) == 1


def single_edge_components(g: Graph) -> list[list[int]]:
    """Components that are a bare K2; they admit no local antimagic labeling."""
    return [
        c
        for c in connected_components(g)
        if len(c) == 2 and g.degree(c[0]) == 1 and g.degree(c[1]) == 1
    ]


# ------------------------- Euler tours ------------------------- #


def _check_eulerian(g: Graph) -> None:
    if g.q == 0:
        raise NotEulerianError("graph has no edges")
    odd = [v for v, d in enumerate(g.degrees) if d % 2]
    if odd:
        raise NotEulerianError(f"vertices of odd degree: {odd}")
    non_isolated = [c for c in connected_components(g) if len(c) > 1]
    if len(non_isolated) != 1:
        raise NotEulerianError(
            f"edges span {len(non_isolated)} components; an Euler tour needs one"
        )


def euler_tour(
    g: Graph,
    start_edge: Optional[int] = None,
    start_vertex: Optional[int] = None,
) -> EulerTour:
    """
    Deterministic closed Euler tour (Hierholzer, lowest-index unused edge first).

    With `start_edge` = (u, v) the tour begins x_1 = u, x_2 = v, where u is
    `start_vertex` when given and the lower end of the edge otherwise. With only
    `start_vertex` the tour starts there; otherwise at the lowest non-isolated
    vertex.
    """
    _check_eulerian(g)

    if start_edge is not None:
        if not 0 <= start_edge < g.q:
            raise InvalidGraphError(f"edge index {start_edge} out of range")
        low, high = g.edges[start_edge]
        if start_vertex is None:
            start_vertex = low
        elif start_vertex not in (low, high):
            raise InvalidGraphError(
                f"start vertex {start_vertex} is not an end of edge {start_edge}"
            )
    elif start_vertex is None:
        start_vertex = next(v for v, d in enumerate(g.degrees) if d > 0)
    elif not 0 <= start_vertex < g.vertex_count or g.degree(start_vertex) == 0:
        raise NotEulerianError(f"start vertex {start_vertex} has no edges")

    used = [False] * g.q
    pointer = [0] * g.vertex_count
    stack: list[tuple[int, int | None]] = [(start_vertex, None)]
    if start_edge is not None:
        used[start_edge] = True
        stack.append((g.other_end(start_edge, start_vertex), start_edge))

    circuit: list[tuple[int, int | None]] = []
    while stack:
        v, _ = stack[-1]
        incident = g.incidence[v]
        while pointer[v] < len(incident) and used[incident[pointer[v]]]:
            pointer[v] += 1
        if pointer[v] < len(incident):
            edge = incident[pointer[v]]
            used[edge] = True
            stack.append((g.other_end(edge, v), edge))
        else:
            circuit.append(stack.pop())

    circuit.reverse()
    # circuit = [(x1, None), (x2, e1), ..., (x1, eq)]
    tour = EulerTour(
        vertices=tuple(v for v, _ in circuit[:-1]),
        edge_indices=tuple(e for _, e in circuit[1:]),
    )
    if tour.length != g.q:
        raise InternalInvariantError(f"tour used {tour.length} of {g.q} edges")

    logger.debug("euler_tour_built", q=g.q, start=start_vertex, first_edge=tour.edge_indices[0])
    return tour


def replay_tour(g: Graph, tour: EulerTour) -> bool:
    """Each edge once, consecutive incidence, closed."""
    if tour.length != g.q or len(tour.vertices) != g.q:
        return False
    if sorted(tour.edge_indices) != list(range(g.q)):
        return False
    walk = tour.closed_walk()
    for i, edge in enumerate(tour.edge_indices):
        if set(g.edges[edge]) != {walk[i], walk[i + 1]}:
            return False
    return True


# ------------------------- bipartition ------------------------- #


def _two_color(g: Graph) -> tuple[list[int], list[int], tuple[int, ...] | None]:
    """BFS per component; returns colors, BFS parents and an odd closed walk if any."""
    color = [-1] * g.vertex_count
    parent = [-1] * g.vertex_count
    for root in range(g.vertex_count):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    return color, parent, _odd_walk(parent, u, w)
    return color, parent, None


def _path_to_root(parent: list[int], v: int) -> list[int]:
    path = [v]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    return path


def _odd_walk(parent: list[int], u: int, w: int) -> tuple[int, ...]:
    # root..u, then w..root; both tree paths have equal parity so the walk is odd
    up = _path_to_root(parent, u)
    wp = _path_to_root(parent, w)
    return tuple(reversed(up)) + tuple(wp)


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    color, _, odd = _two_color(g)
    if odd is not None:
        return None
    part_a = frozenset(v for v, c in enumerate(color) if c == 0)
    part_b = frozenset(v for v, c in enumerate(color) if c == 1)
    return part_a, part_b


def odd_closed_walk(g: Graph) -> tuple[int, ...] | None:
    """Closed walk (first vertex repeated at the end) of odd length, if any."""
    return _two_color(g)[2]


# ------------------------- chromatic number ------------------------- #


def greedy_clique(g: Graph) -> list[int]:
    clique: list[int] = []
    candidates = list(range(g.vertex_count))
    while candidates:
        v = max(candidates, key=lambda x: (len(g.adjacency[x]), -x))
        clique.append(v)
        neighbours = set(g.adjacency[v])
        candidates = [c for c in candidates if c in neighbours]
    return clique


def dsatur_coloring(g: Graph) -> list[int]:
    """Greedy DSATUR coloring; ties broken by degree then lowest index."""
    color = [-1] * g.vertex_count
    saturation: list[set[int]] = [set() for _ in range(g.vertex_count)]
    for _ in range(g.vertex_count):
        v = max(
            (x for x in range(g.vertex_count) if color[x] == -1),
            key=lambda x: (len(saturation[x]), g.degree(x), -x),
        )
        c = 0
        while c in saturation[v]:
            c += 1
        color[v] = c
        for w in g.adjacency[v]:
            saturation[w].add(c)
    return color


def _colorable(g: Graph, k: int) -> bool:
    color = [-1] * g.vertex_count

    def pick() -> int | None:
        best, best_key = None, None
        for x in range(g.vertex_count):
            if color[x] != -1:
                continue
            seen = {color[w] for w in g.adjacency[x] if color[w] != -1}
            key = (len(seen), g.degree(x), -x)
            if best_key is None or key > best_key:
                best, best_key = x, key
        return best

    def search(used: int) -> bool:
        v = pick()
        if v is None:
            return True
        blocked = {color[w] for w in g.adjacency[v] if color[w] != -1}
        # a fresh color is interchangeable with any other unused one
        for c in range(min(k, used + 1)):
            if c in blocked:
                continue
            color[v] = c
            if search(max(used, c + 1)):
                return True
            color[v] = -1
        return False

    return search(0)


def chromatic_number(g: Graph, max_vertices: int | None = None) -> int:
    """Exact chromatic number by iterative deepening over k with DSATUR order."""
    limit = max_vertices if max_vertices is not None else settings.CHROMATIC_MAX_VERTICES
    if g.vertex_count > limit:
        raise BudgetExceededError(
            f"chromatic_number supports at most {limit} vertices, got {g.vertex_count}"
        )
    if g.vertex_count == 0:
        return 0
    if g.q == 0:
        return 1

    lower = len(greedy_clique(g))
    upper = max(dsatur_coloring(g)) + 1
    for k in range(lower, upper):
        if _colorable(g, k):
            return k
    return upper


def analyze(g: Graph) -> GraphAnalysisResponse:
    """Degrees, bipartition or odd walk, chromatic number and an Euler tour when they exist."""
    parts = bipartition(g)
    try:
        chi: int | None = chromatic_number(g)
    except BudgetExceededError:
        chi = None
    try:
        tour: list[int] | None = list(euler_tour(g).closed_walk())
    except NotEulerianError:
        tour = None
    walk = odd_closed_walk(g) if parts is None else None
    return GraphAnalysisResponse(
        p=g.p,
        q=g.q,
        degrees=list(g.degrees),
        regular_degree=g.regular_degree,
        connected=is_connected(g),
        bipartition=(sorted(parts[0]), sorted(parts[1])) if parts else None,
        odd_closed_walk=list(walk) if walk else None,
        chromatic_number=chi,
        euler_tour=tour,
    )

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

import networkx as nx

from app.common.exceptions import InvalidGraphError
from app.schemas.graph_schemas import GraphPayload


Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """
    Finite simple undirected graph on vertices 0..p-1.

    The edge list is canonical: every pair is stored as (low, high) and the list
    is sorted, so equal graphs compare and serialize identically. Edge indices
    refer to positions in this list.
    """

    vertex_count: int
    edges: tuple[Edge, ...]
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise InvalidGraphError("vertex count must be non-negative")
        previous: Edge | None = None
        for u, v in self.edges:
            if not (0 <= u < v < self.vertex_count):
                raise InvalidGraphError(
                    f"edge ({u}, {v}) is not a canonical pair of distinct vertices "
                    f"in [0, {self.vertex_count})"
                )
            if previous is not None and (u, v) <= previous:
                raise InvalidGraphError(
                    f"edge list is not strictly sorted at ({u}, {v})"
                )
            previous = (u, v)

    @classmethod
    def from_edges(
        cls, vertex_count: int, edges: Iterable[Iterable[int]], name: str | None = None
    ) -> "Graph":
        """Canonicalize an arbitrary pair list; rejects loops and parallel edges."""
        canonical: set[Edge] = set()
        for pair in edges:
            u, v = tuple(pair)
            if u == v:
                raise InvalidGraphError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in canonical:
                raise InvalidGraphError(f"parallel edge {key}")
            canonical.add(key)
        return cls(vertex_count, tuple(sorted(canonical)), name)

    @classmethod
    def from_payload(cls, payload: GraphPayload) -> "Graph":
        return cls.from_edges(payload.p, payload.edges)

    @classmethod
    def from_networkx(cls, g: nx.Graph, name: str | None = None) -> "Graph":
        """Relabel nodes by their sorted order and canonicalize."""
        if g.is_directed() or g.is_multigraph():
            raise InvalidGraphError("only simple undirected graphs are supported")
        order = {node: i for i, node in enumerate(sorted(g.nodes))}
        return cls.from_edges(
            len(order), ((order[u], order[v]) for u, v in g.edges), name
        )

    def to_payload(self) -> GraphPayload:
        return GraphPayload(p=self.vertex_count, edges=list(self.edges))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.edges)
        return g

    def to_dot(self, vertex_labels: dict[int, str] | None = None) -> str:
        lines = [f"graph {self._dot_id()} {{"]
        for v in range(self.vertex_count):
            label = (vertex_labels or {}).get(v, str(v))
            lines.append(f'  {v} [label="{label}"];')
        for u, v in self.edges:
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def _dot_id(self) -> str:
        if not self.name:
            return "G"
        return '"' + self.name.replace('"', "'") + '"'

    @property
    def p(self) -> int:
        return self.vertex_count

    @property
    def q(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {edge: i for i, edge in enumerate(self.edges)}

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices incident to each vertex, ascending."""
        incident: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for i, (u, v) in enumerate(self.edges):
            incident[u].append(i)
            incident[v].append(i)
        return tuple(tuple(items) for items in incident)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(sorted(self.other_end(e, v) for e in self.incidence[v]))
            for v in range(self.vertex_count)
        )

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(items) for items in self.incidence)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    @cached_property
    def regular_degree(self) -> int | None:
        """The common degree when the graph is regular, else None."""
        if self.vertex_count == 0:
            return None
        first = self.degrees[0]
        return first if all(d == first for d in self.degrees) else None

    @property
    def is_regular(self) -> bool:
        return self.regular_degree is not None

    def has_edge(self, u: int, v: int) -> bool:
        key = (u, v) if u < v else (v, u)
        return key in self.edge_index

    def edge_id(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        try:
            return self.edge_index[key]
        except KeyError:
            raise InvalidGraphError(f"({u}, {v}) is not an edge") from None

    def other_end(self, edge: int, v: int) -> int:
        a, b = self.edges[edge]
        if v == a:
            return b
        if v == b:
            return a
        raise InvalidGraphError(f"vertex {v} is not an end of edge {edge}")

    def remove_edge(self, edge: int) -> "Graph":
        """G - e; edges after `edge` shift down by one index."""
        if not 0 <= edge < self.q:
            raise InvalidGraphError(f"edge index {edge} out of range")
        return Graph(
            self.vertex_count, self.edges[:edge] + self.edges[edge + 1 :], self.name
        )


@dataclass(frozen=True)
class EulerTour:
    """
    Closed walk x_1 ... x_q (return to x_1 implicit) using every edge once.

    `edge_indices[i]` is the edge joining `vertices[i]` and `vertices[i + 1]`
    (indices taken cyclically).
    """

    vertices: tuple[int, ...]
    edge_indices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edge_indices)

    @property
    def start(self) -> int:
        return self.vertices[0]

    def closed_walk(self) -> tuple[int, ...]:
        return self.vertices + self.vertices[:1]

    def positions(self, v: int) -> list[int]:
        """1-based positions at which v is visited."""
        return [i + 1 for i, x in enumerate(self.vertices) if x == v]

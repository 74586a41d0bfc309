from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from app.common.exceptions import MalformedLabelingError
from app.schemas.labeling_schemas import LabeledGraphPayload, LabelingPayload
from app.services.graph.graph import Graph


@dataclass(frozen=True)
class EdgeLabeling:
    """
    Edge labels of `graph` in canonical edge order.

    Construction only checks shape (one positive integer per edge); whether the
    labels form a bijection onto [1, q] is reported by `is_bijection` and by the
    verifier, so improper experimental labelings can still be represented.
    """

    graph: Graph
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.labels) != self.graph.q:
            raise MalformedLabelingError(
                f"expected {self.graph.q} labels, got {len(self.labels)}"
            )
        for i, label in enumerate(self.labels):
            if isinstance(label, bool) or not isinstance(label, int) or label < 1:
                raise MalformedLabelingError(
                    f"label at edge {i} must be a positive integer, got {label!r}"
                )

    @classmethod
    def from_labels(cls, graph: Graph, labels: Iterable[int]) -> "EdgeLabeling":
        return cls(graph, tuple(int(x) for x in labels))

    @classmethod
    def from_mapping(
        cls, graph: Graph, labels: Mapping[tuple[int, int], int]
    ) -> "EdgeLabeling":
        """Labels keyed by vertex pair in either orientation."""
        values: list[int | None] = [None] * graph.q
        for (u, v), label in labels.items():
            edge = graph.edge_id(u, v)
            if values[edge] is not None:
                raise MalformedLabelingError(f"edge ({u}, {v}) labeled twice")
            values[edge] = label
        missing = [graph.edges[i] for i, x in enumerate(values) if x is None]
        if missing:
            raise MalformedLabelingError(f"unlabeled edges: {missing}")
        return cls(graph, tuple(values))  # type: ignore[arg-type]

    @classmethod
    def from_payload(
        cls, graph: Graph, payload: LabelingPayload | LabeledGraphPayload
    ) -> "EdgeLabeling":
        return cls.from_labels(graph, payload.labels)

    @property
    def q(self) -> int:
        return self.graph.q

    def label(self, edge: int) -> int:
        return self.labels[edge]

    def label_of(self, u: int, v: int) -> int:
        return self.labels[self.graph.edge_id(u, v)]

    @cached_property
    def is_bijection(self) -> bool:
        return sorted(self.labels) == list(range(1, self.q + 1))

    @cached_property
    def vertex_sums(self) -> tuple[int, ...]:
        """f+(v): sum of the labels incident to v."""
        sums = [0] * self.graph.vertex_count
        for (u, v), label in zip(self.graph.edges, self.labels):
            sums[u] += label
            sums[v] += label
        return tuple(sums)

    def vertex_sum(self, v: int) -> int:
        return self.vertex_sums[v]

    @property
    def colors(self) -> list[int]:
        return sorted(set(self.vertex_sums))

    @property
    def color_count(self) -> int:
        return len(set(self.vertex_sums))

    def edge_with_label(self, label: int) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise MalformedLabelingError(f"no edge carries label {label}") from None

    def to_payload(self, proper: bool | None = None) -> LabelingPayload:
        return LabelingPayload(labels=list(self.labels), colors=self.colors, proper=proper)

    def to_labeled_payload(self, proper: bool | None = None) -> LabeledGraphPayload:
        return LabeledGraphPayload(
            p=self.graph.vertex_count,
            edges=list(self.graph.edges),
            labels=list(self.labels),
            colors=self.colors,
            proper=proper,
        )

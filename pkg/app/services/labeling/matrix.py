from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from app.common.exceptions import MalformedLabelingError, MalformedMatrixError, ParseError
from app.services.graph.graph import Graph
from app.services.labeling.labeling import EdgeLabeling


SENTINEL = "*"


@dataclass(frozen=True, eq=False)
class LabelingMatrix:
    """
    Symmetric p x p matrix of edge labels; 0 marks a non-edge or the diagonal
    and is written as "*" in text form.
    """

    entries: np.ndarray

    def __post_init__(self) -> None:
        array = np.array(self.entries, dtype=np.int64, copy=True)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise MalformedMatrixError(f"matrix must be square, got shape {array.shape}")
        if (array < 0).any():
            raise MalformedMatrixError("matrix entries must be non-negative")
        array.setflags(write=False)
        object.__setattr__(self, "entries", array)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabelingMatrix):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    __hash__ = None  # type: ignore[assignment]

    @property
    def size(self) -> int:
        return int(self.entries.shape[0])

    def row_sums(self) -> list[int]:
        return [int(x) for x in self.entries.sum(axis=1)]

    def to_text(self) -> str:
        return "".join(
            " ".join(str(int(x)) if x else SENTINEL for x in row) + "\n"
            for row in self.entries
        )

    @classmethod
    def from_text(cls, text: str) -> "LabelingMatrix":
        rows: list[list[int]] = []
        for line_no, line in enumerate(text.splitlines(), start=1):
            row = []
            for col_no, token in enumerate(line.split(" "), start=1):
                if token == SENTINEL:
                    row.append(0)
                elif token.isdigit() and not token.startswith("0"):
                    row.append(int(token))
                else:
                    raise ParseError(
                        f"line {line_no}, column {col_no}",
                        f"expected a positive integer or '{SENTINEL}', got {token!r}",
                    )
            rows.append(row)
        for line_no, row in enumerate(rows, start=1):
            if len(row) != len(rows):
                raise ParseError(
                    f"line {line_no}", f"expected {len(rows)} tokens, got {len(row)}"
                )
        return cls(np.array(rows, dtype=np.int64).reshape(len(rows), len(rows)))


def to_matrix(g: Graph, f: EdgeLabeling) -> LabelingMatrix:
    if f.graph != g:
        raise MalformedLabelingError("labeling is defined on a different edge set")
    if not f.is_bijection:
        raise MalformedLabelingError("labels must be a bijection onto [1, q]")
    entries = np.zeros((g.vertex_count, g.vertex_count), dtype=np.int64)
    if g.q:
        rows, cols = np.array(g.edges, dtype=np.int64).T
        values = np.array(f.labels, dtype=np.int64)
        entries[rows, cols] = values
        entries[cols, rows] = values
    return LabelingMatrix(entries)


def from_matrix(m: LabelingMatrix) -> tuple[Graph, EdgeLabeling]:
    entries = m.entries
    if not np.array_equal(entries, entries.T):
        bad = np.argwhere(entries != entries.T)[0]
        raise MalformedMatrixError(f"matrix is not symmetric at ({bad[0]}, {bad[1]})")
    if np.diagonal(entries).any():
        raise MalformedMatrixError("diagonal must hold the sentinel")

    rows, cols = np.nonzero(np.triu(entries))
    edges = list(zip(rows.tolist(), cols.tolist()))
    labels = [int(entries[u, v]) for u, v in edges]
    if sorted(labels) != list(range(1, len(labels) + 1)):
        raise MalformedMatrixError(
            f"labels are not a bijection onto [1, {len(labels)}]"
        )
    # np.nonzero walks row-major, which is the canonical edge order
    g = Graph(m.size, tuple(edges))
    return g, EdgeLabeling(g, tuple(labels))

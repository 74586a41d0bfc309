from __future__ import annotations

from typing import Sequence

import numpy as np

from app.common.exceptions import (
    InternalInvariantError,
    InvalidOrderError,
    MalformedLabelingError,
)
from app.config.logging import logger
from app.schemas.construction_schemas import LexConditionResult
from app.services.graph.families import null
from app.services.graph.graph import Graph
from app.services.graph.products import lex_product
from app.services.labeling.labeling import EdgeLabeling
from app.services.magic_service import magic_square


# rows sum to 5, columns do not; order two has no magic square
ORDER_TWO_ARRANGEMENT = np.array([[1, 4], [3, 2]], dtype=np.int64)


def block_base(n: int) -> np.ndarray:
    if n >= 3:
        return magic_square(n).entries
    if n == 2:
        return ORDER_TWO_ARRANGEMENT
    raise InvalidOrderError(f"blow-up order must be >= 2, got {n}")


def lex_vertex_sum(color: int, degree: int, n: int) -> int:
    """f+(u) n^3 - (n^3 - n) deg(u) / 2."""
    return color * n**3 - (n**3 - n) * degree // 2


def lex_labeling(g: Graph, f: EdgeLabeling, n: int) -> EdgeLabeling:
    """
    Labeling of G[O_n]: the edge (u_l, x_j)(u_l', x_j') with l < l' gets entry
    (j, j') of Omega + (f(u_l u_l') - 1) n^2.

    For n = 2 the base is ORDER_TWO_ARRANGEMENT and the result is experimental.
    """
    if f.graph != g:
        raise MalformedLabelingError("labeling is defined on a different edge set")
    if not f.is_bijection:
        raise MalformedLabelingError("base labels must be a bijection onto [1, q]")
    base = block_base(n)
    if n == 2:
        logger.warning("lex_order_two_experimental", graph=g.name, q=g.q)

    h = lex_product(g, null(n))
    labels = [0] * h.q
    for (l, l_prime), label in zip(g.edges, f.labels):
        block = base + (label - 1) * n * n
        for j in range(n):
            for j_prime in range(n):
                labels[h.edge_id(l * n + j, l_prime * n + j_prime)] = int(block[j, j_prime])
    result = EdgeLabeling(h, tuple(labels))

    if not result.is_bijection:
        raise InternalInvariantError("block labels do not fill [1, q n^2]")
    if n >= 3:
        for u in range(g.vertex_count):
            expected = lex_vertex_sum(f.vertex_sum(u), g.degree(u), n)
            got = {result.vertex_sum(u * n + j) for j in range(n)}
            if got != {expected}:
                logger.error("lex_vertex_sum_mismatch", vertex=u, expected=expected, got=sorted(got))
                raise InternalInvariantError(
                    f"blow-up of vertex {u} has sums {sorted(got)}, expected {expected}"
                )

    logger.debug("lex_labeling_built", graph=g.name, n=n, q=h.q, colors=result.color_count)
    return result


def check_lex_profile(profile: Sequence[tuple[int, int]], n: int) -> LexConditionResult:
    """
    Evaluate the two blow-up conditions on (color, degree) pairs:
    (i) equal colors need equal degrees, (ii) different colors need different
    blown-up sums. The witness is a pair of indices into `profile`.
    """
    if n < 2:
        raise InvalidOrderError(f"blow-up order must be >= 2, got {n}")
    for a in range(len(profile)):
        color_a, degree_a = profile[a]
        for b in range(a + 1, len(profile)):
            color_b, degree_b = profile[b]
            if color_a == color_b:
                if degree_a != degree_b:
                    return LexConditionResult(
                        holds=False,
                        condition="i",
                        witness=(a, b),
                        detail=f"color {color_a} at degrees {degree_a} and {degree_b}",
                    )
            elif lex_vertex_sum(color_a, degree_a, n) == lex_vertex_sum(color_b, degree_b, n):
                return LexConditionResult(
                    holds=False,
                    condition="ii",
                    witness=(a, b),
                    detail=(
                        f"colors {color_a} and {color_b} both blow up to "
                        f"{lex_vertex_sum(color_a, degree_a, n)}"
                    ),
                )
    return LexConditionResult(holds=True)


def check_lex_conditions(g: Graph, f: EdgeLabeling, n: int) -> LexConditionResult:
    """Blow-up conditions over all vertex pairs of g; witnesses are vertices."""
    if f.graph != g:
        raise MalformedLabelingError("labeling is defined on a different edge set")
    if n < 3:
        raise InvalidOrderError(f"the blow-up conditions are stated for n >= 3, got {n}")
    profile = [(f.vertex_sum(v), g.degree(v)) for v in range(g.vertex_count)]
    return check_lex_profile(profile, n)

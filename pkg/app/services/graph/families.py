from __future__ import annotations

import networkx as nx

from app.common.exceptions import InvalidSpecError
from app.config.logging import logger
from app.schemas.graph_schemas import Family, FamilySpec
from app.services.graph.graph import Graph


# family -> (minimum n, needs m, minimum m)
_PARAMETER_RULES: dict[Family, tuple[int, bool, int]] = {
    Family.CYCLE: (3, False, 0),
    Family.PATH: (2, False, 0),
    Family.COMPLETE: (1, False, 0),
    Family.COMPLETE_BIPARTITE: (1, True, 1),
    Family.NULL: (1, False, 0),
    Family.WHEEL: (3, False, 0),
    Family.MOBIUS_LADDER: (4, False, 0),
    Family.G_MN: (2, True, 2),
}


def _validate(spec: FamilySpec) -> None:
    min_n, needs_m, min_m = _PARAMETER_RULES[spec.family]
    if spec.n < min_n:
        raise InvalidSpecError(f"{spec.family.value} requires n >= {min_n}, got {spec.n}")
    if needs_m:
        if spec.m is None or spec.m < min_m:
            raise InvalidSpecError(
                f"{spec.family.value} requires m >= {min_m}, got {spec.m}"
            )
    elif spec.m is not None:
        raise InvalidSpecError(f"{spec.family.value} takes no m parameter")
    if spec.family == Family.MOBIUS_LADDER and spec.n % 2:
        raise InvalidSpecError(f"mobius_ladder order must be even, got {spec.n}")


def g_mn_graph(m: int, n: int) -> Graph:
    """
    The 4-regular bipartite family on v_{i,j}, 1 <= i <= m, 0 <= j <= 2n-1.

    Vertex v_{i,j} has index (i-1)*2n + j, and v_{i,2n} = v_{i,0}.
    """
    width = 2 * n

    def v(i: int, j: int) -> int:
        return (i - 1) * width + (j % width)

    edges: list[tuple[int, int]] = []
    for j in range(width):
        edges.append((v(1, j), v(1, j + 1)))
        for i in range(1, m):
            edges.append((v(i, j), v(i + 1, j + 1)))
            edges.append((v(i + 1, j), v(i, j + 1)))
        edges.append((v(m, j), v(m, j + 1)))
    return Graph.from_edges(m * width, edges, name=f"G_{m},{n}")


def generate(spec: FamilySpec) -> Graph:
    """Canonical graph of the named family."""
    _validate(spec)
    n, m = spec.n, spec.m

    match spec.family:
        case Family.CYCLE:
            graph = Graph.from_networkx(nx.cycle_graph(n), name=f"C{n}")
        case Family.PATH:
            graph = Graph.from_networkx(nx.path_graph(n), name=f"P{n}")
        case Family.COMPLETE:
            graph = Graph.from_networkx(nx.complete_graph(n), name=f"K{n}")
        case Family.COMPLETE_BIPARTITE:
            graph = Graph.from_networkx(
                nx.complete_bipartite_graph(m, n), name=f"K{m},{n}"
            )
        case Family.NULL:
            graph = Graph.from_networkx(nx.empty_graph(n), name=f"O{n}")
        case Family.WHEEL:
            # hub 0, rim 1..n in cyclic order
            graph = Graph.from_networkx(nx.wheel_graph(n + 1), name=f"W{n}")
        case Family.MOBIUS_LADDER:
            graph = Graph.from_networkx(
                nx.circulant_graph(n, [1, n // 2]), name=f"M{n}"
            )
        case Family.G_MN:
            graph = g_mn_graph(m, n)

    logger.debug(
        "family_generated",
        family=spec.family.value,
        n=n,
        m=m,
        p=graph.p,
        q=graph.q,
    )
    return graph


def cycle(n: int) -> Graph:
    return generate(FamilySpec(family=Family.CYCLE, n=n))


def path(n: int) -> Graph:
    return generate(FamilySpec(family=Family.PATH, n=n))


def complete(n: int) -> Graph:
    return generate(FamilySpec(family=Family.COMPLETE, n=n))


def complete_bipartite(m: int, n: int) -> Graph:
    return generate(FamilySpec(family=Family.COMPLETE_BIPARTITE, n=n, m=m))


def null(n: int) -> Graph:
    return generate(FamilySpec(family=Family.NULL, n=n))


def wheel(n: int) -> Graph:
    return generate(FamilySpec(family=Family.WHEEL, n=n))


def mobius_ladder(order: int) -> Graph:
    return generate(FamilySpec(family=Family.MOBIUS_LADDER, n=order))


def g_mn(m: int, n: int) -> Graph:
    return generate(FamilySpec(family=Family.G_MN, n=n, m=m))

from __future__ import annotations

import networkx as nx

from app.common.exceptions import InvalidSpecError
from app.services.graph.graph import Graph


def _row_major(g: Graph, h: Graph, product: nx.Graph, name: str) -> Graph:
    """Vertex (u_l, x_j) gets index l * p_h + j (0-based)."""
    p_h = h.vertex_count
    return Graph.from_edges(
        g.vertex_count * p_h,
        ((a[0] * p_h + a[1], b[0] * p_h + b[1]) for a, b in product.edges),
        name=name,
    )


def _name(g: Graph, fallback: str) -> str:
    return g.name or fallback


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of g and h (h shifted by p_g) plus every cross edge."""
    shift = g.vertex_count
    edges = list(g.edges)
    edges.extend((u + shift, v + shift) for u, v in h.edges)
    edges.extend(
        (u, x + shift) for u in range(g.vertex_count) for x in range(h.vertex_count)
    )
    return Graph.from_edges(
        g.vertex_count + h.vertex_count,
        edges,
        name=f"{_name(g, 'G')}v{_name(h, 'H')}",
    )


def lex_product(g: Graph, h: Graph) -> Graph:
    """G[H]: (u,x)~(v,y) iff uv in E(G), or u = v and xy in E(H)."""
    product = nx.lexicographic_product(g.to_networkx(), h.to_networkx())
    return _row_major(g, h, product, f"{_name(g, 'G')}[{_name(h, 'H')}]")


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """(u,x)~(v,y) iff (u = v and xy in E(H)) or (x = y and uv in E(G))."""
    product = nx.cartesian_product(g.to_networkx(), h.to_networkx())
    return _row_major(g, h, product, f"{_name(g, 'G')}x{_name(h, 'H')}")


def disjoint_copies(m: int, g: Graph) -> Graph:
    """mG; copy c occupies indices c*p .. c*p + p - 1."""
    if m < 1:
        raise InvalidSpecError(f"number of copies must be >= 1, got {m}")
    if m == 1:
        return g
    p = g.vertex_count
    return Graph.from_edges(
        m * p,
        ((u + c * p, v + c * p) for c in range(m) for u, v in g.edges),
        name=f"{m}{_name(g, 'G')}",
    )

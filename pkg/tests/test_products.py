from __future__ import annotations

import networkx as nx
import pytest

from app.common.exceptions import InvalidSpecError
from app.services.graph import families
from app.services.graph.analysis import bipartition
from app.services.graph.products import cartesian_product, disjoint_copies, join, lex_product


def test_join_with_null_graph(c4):
    g = join(c4, families.null(2))

    assert (g.p, g.q) == (6, 12)
    assert g.degrees == (4, 4, 4, 4, 4, 4)
    assert g.has_edge(0, 4) and g.has_edge(3, 5)
    assert not g.has_edge(4, 5)


def test_join_of_single_vertex_and_cycle_is_a_wheel(c4):
    assert join(families.null(1), c4) == families.wheel(4)


def test_lex_product_with_null_graph_indexes_row_major(c4):
    g = lex_product(c4, families.null(3))

    assert (g.p, g.q) == (12, 36)
    assert g.regular_degree == 6
    # (u_1, x_0) ~ (u_2, x_2) since u1u2 is an edge; same-layer vertices are not adjacent
    assert g.has_edge(0 * 3 + 0, 1 * 3 + 2)
    assert not g.has_edge(0, 1)
    assert not g.has_edge(0 * 3 + 1, 2 * 3 + 1)


def test_lex_product_of_edge_and_null_graph_is_complete_bipartite():
    for n in (1, 2, 3, 4):
        assert lex_product(families.complete(2), families.null(n)) == families.complete_bipartite(n, n)


def test_lex_product_with_single_vertex_is_identity():
    g = families.g_mn(2, 2)
    assert lex_product(g, families.null(1)) == g


def test_lex_product_degree_law():
    g, h = families.wheel(4), families.path(3)
    product = lex_product(g, h)

    for u in range(g.p):
        for x in range(h.p):
            assert product.degree(u * h.p + x) == g.degree(u) * h.p + h.degree(x)


def test_cartesian_products():
    torus = cartesian_product(families.cycle(4), families.cycle(4))
    prism = cartesian_product(families.cycle(4), families.cycle(6))

    assert (torus.p, torus.q, torus.regular_degree) == (16, 32, 4)
    assert (prism.p, prism.q, prism.regular_degree) == (24, 48, 4)
    assert bipartition(torus) is not None
    k2 = families.complete(2)
    assert nx.is_isomorphic(cartesian_product(k2, k2).to_networkx(), families.cycle(4).to_networkx())


def test_disjoint_copies():
    two = disjoint_copies(2, families.cycle(4))
    k4s = disjoint_copies(3, families.complete(4))

    assert (two.p, two.q) == (8, 8)
    assert two.edges[-1] == (6, 7)
    assert (k4s.p, k4s.q) == (12, 18)
    assert disjoint_copies(1, families.cycle(5)) == families.cycle(5)
    with pytest.raises(InvalidSpecError):
        disjoint_copies(0, families.cycle(5))

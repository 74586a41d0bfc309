from __future__ import annotations

import networkx as nx
import pytest

from app.common.exceptions import InvalidGraphError, InvalidSpecError
from app.schemas.graph_schemas import Family, FamilySpec, GraphPayload
from app.services.graph import families
from app.services.graph.analysis import bipartition
from app.services.graph.graph import Graph


def test_from_edges_canonicalizes_pairs():
    g = Graph.from_edges(4, [(3, 0), (1, 0), (2, 1)])

    assert g.edges == ((0, 1), (0, 3), (1, 2))
    assert g.p == 4
    assert g.q == 3
    assert g.edge_id(3, 0) == g.edge_id(0, 3) == 1


def test_from_edges_rejects_loops_and_parallel_edges():
    with pytest.raises(InvalidGraphError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(InvalidGraphError):
        Graph.from_edges(3, [(0, 1), (1, 0)])


def test_direct_construction_requires_canonical_sorted_edges():
    with pytest.raises(InvalidGraphError):
        Graph(3, ((1, 0),))
    with pytest.raises(InvalidGraphError):
        Graph(3, ((0, 2), (0, 1)))
    with pytest.raises(InvalidGraphError):
        Graph(2, ((0, 2),))


def test_name_does_not_affect_equality():
    assert Graph.from_edges(3, [(0, 1)], name="a") == Graph.from_edges(3, [(0, 1)], name="b")


def test_edge_lookup_and_incidence(c4):
    assert c4.edges == ((0, 1), (0, 3), (1, 2), (2, 3))
    assert c4.incidence[0] == (0, 1)
    assert c4.adjacency[2] == (1, 3)
    assert c4.other_end(1, 3) == 0
    assert c4.has_edge(3, 2)
    assert not c4.has_edge(0, 2)
    with pytest.raises(InvalidGraphError):
        c4.edge_id(0, 2)


def test_remove_edge_shifts_later_indices(c4):
    h = c4.remove_edge(1)

    assert h.edges == ((0, 1), (1, 2), (2, 3))
    assert h.degrees == (1, 2, 2, 1)
    with pytest.raises(InvalidGraphError):
        c4.remove_edge(4)


def test_networkx_round_trip_relabels_by_sorted_nodes():
    g = Graph.from_networkx(nx.Graph([("b", "a"), ("b", "c")]))

    assert g.edges == ((0, 1), (1, 2))
    assert Graph.from_networkx(families.wheel(5).to_networkx()) == families.wheel(5)


def test_payload_and_dot_output(c4):
    payload = c4.to_payload()

    assert payload == GraphPayload(p=4, edges=[(0, 1), (0, 3), (1, 2), (2, 3)])
    assert Graph.from_payload(payload) == c4
    dot = c4.to_dot()
    assert dot.startswith('graph "C4" {\n')
    assert "  0 -- 3;\n" in dot
    assert dot.endswith("}\n")


@pytest.mark.parametrize(
    "spec, p, q, degree",
    [
        (FamilySpec(family=Family.CYCLE, n=7), 7, 7, 2),
        (FamilySpec(family=Family.COMPLETE, n=5), 5, 10, 4),
        (FamilySpec(family=Family.COMPLETE_BIPARTITE, n=3, m=3), 6, 9, 3),
        (FamilySpec(family=Family.MOBIUS_LADDER, n=6), 6, 9, 3),
        (FamilySpec(family=Family.MOBIUS_LADDER, n=8), 8, 12, 3),
        (FamilySpec(family=Family.G_MN, n=2, m=2), 8, 16, 4),
        (FamilySpec(family=Family.G_MN, n=2, m=3), 12, 24, 4),
        (FamilySpec(family=Family.G_MN, n=3, m=2), 12, 24, 4),
    ],
)
def test_regular_families(spec, p, q, degree):
    g = families.generate(spec)

    assert (g.p, g.q) == (p, q)
    assert g.regular_degree == degree
    assert sum(g.degrees) == 2 * g.q


def test_g_mn_is_bipartite():
    for m, n in [(2, 2), (3, 2), (2, 3), (4, 5)]:
        assert bipartition(families.g_mn(m, n)) is not None


def test_irregular_families():
    wheel = families.wheel(4)
    star = families.complete_bipartite(1, 3)

    assert (wheel.p, wheel.q) == (5, 8)
    assert wheel.degrees == (4, 3, 3, 3, 3)
    assert star.degrees == (3, 1, 1, 1)
    assert families.path(4).edges == ((0, 1), (1, 2), (2, 3))
    assert families.null(3).q == 0


@pytest.mark.parametrize(
    "spec",
    [
        FamilySpec(family=Family.CYCLE, n=2),
        FamilySpec(family=Family.CYCLE, n=5, m=2),
        FamilySpec(family=Family.PATH, n=1),
        FamilySpec(family=Family.COMPLETE_BIPARTITE, n=3),
        FamilySpec(family=Family.WHEEL, n=2),
        FamilySpec(family=Family.MOBIUS_LADDER, n=7),
        FamilySpec(family=Family.G_MN, n=2, m=1),
        FamilySpec(family=Family.G_MN, n=1, m=2),
    ],
)
def test_invalid_family_parameters(spec):
    with pytest.raises(InvalidSpecError):
        families.generate(spec)

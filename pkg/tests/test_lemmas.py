from __future__ import annotations

import pytest

from app.common.exceptions import (
    InternalInvariantError,
    LemmaPreconditionError,
    UnsupportedGraphError,
)
from app.schemas.labeling_schemas import FeasibilityCondition, FeasibilityVerdict
from app.services.constructions.cycle import cycle_labeling
from app.services.graph import families
from app.services.graph.graph import Graph
from app.services.graph.products import disjoint_copies
from app.services.labeling.labeling import EdgeLabeling
from app.services.labeling.lemmas import (
    chi_la2_feasible,
    complement,
    delete_extreme_edge,
    two_color_admissible,
    two_coloring_certificate,
)
from app.services.labeling.verifier import verify


def test_complement_of_worked_c4(c4_labeling):
    g = c4_labeling.graph
    f = complement(g, c4_labeling)

    assert f.labels == (4, 1, 3, 2)
    assert f.vertex_sums == (5, 7, 5, 3)
    assert verify(g, f).colors == [3, 5, 7]
    assert complement(g, f) == c4_labeling


def test_complement_of_single_edge_is_identity():
    g = families.complete(2)
    f = EdgeLabeling.from_labels(g, [1])
    assert complement(g, f) == f


def test_complement_keeps_color_count_on_regular_graphs():
    for n in range(3, 12):
        f = cycle_labeling(n)
        report = verify(f.graph, complement(f.graph, f))
        assert report.is_local_antimagic
        assert report.color_count == f.color_count


def test_delete_top_edge_of_c4():
    f = cycle_labeling(4)
    assert f.labels == (4, 2, 1, 3)

    result = delete_extreme_edge(f.graph, f, 0)

    assert not result.construction_failed
    assert result.recipe == "complement/shift"
    assert result.graph == families.cycle(4).remove_edge(0)
    assert result.labeling.labels == (2, 3, 1)
    assert result.report.colors == [2, 3, 4]
    assert [c.recipe for c in result.candidates] == ["f/restrict", "complement/shift"]
    for candidate in result.candidates:
        assert sorted(candidate.labeling.labels) == [1, 2, 3]


def test_delete_bottom_edge_of_c6():
    f = cycle_labeling(6)
    result = delete_extreme_edge(f.graph, f, f.edge_with_label(1))

    assert not result.construction_failed
    assert result.report.is_local_antimagic
    assert result.report.color_count <= 3
    assert result.graph.q == 5


def test_deletion_preconditions(c4_labeling):
    g = c4_labeling.graph
    with pytest.raises(LemmaPreconditionError):
        delete_extreme_edge(g, c4_labeling, c4_labeling.edge_with_label(3))
    with pytest.raises(LemmaPreconditionError):
        delete_extreme_edge(g, c4_labeling, 7)

    # every bijection on a cycle is proper
    improper = EdgeLabeling.from_labels(g, [1, 1, 2, 3])
    assert not verify(g, improper).is_local_antimagic
    with pytest.raises(LemmaPreconditionError):
        delete_extreme_edge(g, improper, 0)

    path = families.path(4)
    with pytest.raises(LemmaPreconditionError):
        delete_extreme_edge(path, EdgeLabeling.from_labels(path, [1, 3, 2]), 0)


def test_two_coloring_certificate(k24_two_color_labeling):
    f = k24_two_color_labeling
    certificate = two_coloring_certificate(f.graph, f)

    assert certificate.x == 9 and certificate.y == 18
    assert certificate.X == [2, 3, 4, 5]
    assert certificate.Y == [0, 1]
    assert certificate.half_total == 36


def test_no_certificate_for_stars_or_three_colors(c4_labeling):
    star = families.complete_bipartite(1, 3)
    assert two_coloring_certificate(star, EdgeLabeling.from_labels(star, [1, 2, 3])) is None
    assert two_coloring_certificate(c4_labeling.graph, c4_labeling) is None


def test_certificate_preconditions(c4):
    with pytest.raises(LemmaPreconditionError):
        two_coloring_certificate(c4, EdgeLabeling.from_labels(c4, [1, 1, 2, 3]))
    g = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(LemmaPreconditionError):
        two_coloring_certificate(g, EdgeLabeling.from_labels(g, [1, 2, 3]))


def test_certificate_would_catch_a_broken_identity(monkeypatch, k24_two_color_labeling):
    from app.schemas.labeling_schemas import VerificationReport
    from app.services.labeling import lemmas

    def fake_verify(g, f):
        return VerificationReport(
            is_bijection=True,
            is_proper=True,
            colors=[9, 18],
            color_count=2,
            vertex_sums=[9, 18, 18, 18, 18, 9],
        )

    monkeypatch.setattr(lemmas, "verify", fake_verify)
    f = k24_two_color_labeling
    with pytest.raises(InternalInvariantError):
        two_coloring_certificate(f.graph, f)


@pytest.mark.parametrize(
    "g, condition",
    [
        (families.cycle(5), FeasibilityCondition.NON_BIPARTITE),
        (families.complete_bipartite(2, 2), FeasibilityCondition.EQUAL_PARTS),
        (families.cycle(6), FeasibilityCondition.EQUAL_PARTS),
        (families.path(3), FeasibilityCondition.DIVISIBILITY),
    ],
)
def test_two_colors_ruled_out(g, condition):
    decision = chi_la2_feasible(g)

    assert decision.verdict == FeasibilityVerdict.NECESSARY_CONDITIONS_FAIL
    assert decision.condition == condition


def test_two_colors_not_ruled_out():
    for g in (families.complete_bipartite(1, 3), families.complete_bipartite(2, 4)):
        decision = chi_la2_feasible(g)
        assert decision.verdict == FeasibilityVerdict.UNKNOWN
        assert decision.condition is None


def test_feasibility_needs_connected_graph():
    with pytest.raises(UnsupportedGraphError):
        chi_la2_feasible(disjoint_copies(2, families.cycle(4)))


def test_two_color_admissible_over_components():
    assert two_color_admissible(families.complete_bipartite(2, 4))
    assert not two_color_admissible(families.cycle(4))
    assert not two_color_admissible(disjoint_copies(2, families.cycle(4)))
    assert not two_color_admissible(families.cycle(5))
    assert not two_color_admissible(Graph.from_edges(3, [(0, 1)]))

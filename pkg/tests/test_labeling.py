from __future__ import annotations

import pytest

from app.common.exceptions import MalformedLabelingError
from app.services.graph import families
from app.services.graph.graph import Graph
from app.services.labeling.labeling import EdgeLabeling
from app.services.labeling.verifier import is_local_antimagic, verify


def test_worked_c4_labeling(c4_labeling):
    f = c4_labeling

    assert f.labels == (1, 4, 2, 3)
    assert f.vertex_sums == (5, 3, 5, 7)
    assert f.colors == [3, 5, 7]
    assert f.label_of(3, 0) == 4
    assert f.edge_with_label(4) == 1


def test_verify_reports_proper_labeling(c4_labeling):
    report = verify(c4_labeling.graph, c4_labeling)

    assert report.is_bijection and report.is_proper
    assert report.is_local_antimagic
    assert report.colors == [3, 5, 7]
    assert report.color_count == 3
    assert report.violations == []
    assert report.chi_la_defined


def test_triangle_with_consecutive_labels():
    g = families.cycle(3)
    f = EdgeLabeling.from_labels(g, [1, 2, 3])

    assert f.vertex_sums == (3, 4, 5)
    assert is_local_antimagic(g, f)


def test_single_edge_is_never_proper():
    g = families.complete(2)
    report = verify(g, EdgeLabeling.from_labels(g, [1]))

    assert report.is_bijection
    assert not report.is_proper
    assert report.violations == [(0, 1)]
    assert not report.chi_la_defined


def test_sum_identity_holds_for_bijections():
    g = families.wheel(5)
    f = EdgeLabeling.from_labels(g, range(1, g.q + 1))

    assert sum(f.vertex_sums) == g.q * (g.q + 1)


def test_verify_flags_non_bijection(c4):
    f = EdgeLabeling.from_labels(c4, [1, 1, 2, 3])
    report = verify(c4, f)

    assert not f.is_bijection
    assert not report.is_bijection
    assert not report.is_local_antimagic


def test_verify_rejects_labeling_of_another_graph(c4_labeling):
    with pytest.raises(MalformedLabelingError):
        verify(families.path(5), c4_labeling)


@pytest.mark.parametrize("labels", [[1, 2, 3], [1, 2, 3, 0], [1, 2, 3, -4], [1, 2, 3, 2.5]])
def test_shape_errors(c4, labels):
    with pytest.raises(MalformedLabelingError):
        EdgeLabeling(c4, tuple(labels))


def test_from_mapping_accepts_either_orientation(c4):
    f = EdgeLabeling.from_mapping(c4, {(1, 0): 1, (3, 0): 4, (2, 1): 2, (3, 2): 3})
    assert f.labels == (1, 4, 2, 3)


def test_from_mapping_errors(c4):
    with pytest.raises(MalformedLabelingError):
        EdgeLabeling.from_mapping(c4, {(0, 1): 1, (1, 0): 2, (1, 2): 3, (2, 3): 4})
    with pytest.raises(MalformedLabelingError):
        EdgeLabeling.from_mapping(c4, {(0, 1): 1, (1, 2): 2, (2, 3): 3})


def test_edge_with_missing_label(c4_labeling):
    with pytest.raises(MalformedLabelingError):
        c4_labeling.edge_with_label(9)


def test_labeled_payload_round_trip(c4_labeling):
    payload = c4_labeling.to_labeled_payload(proper=True)

    assert payload.p == 4
    assert payload.edges == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert payload.labels == [1, 4, 2, 3]
    assert payload.colors == [3, 5, 7]
    g = Graph.from_edges(payload.p, payload.edges)
    assert EdgeLabeling.from_payload(g, payload) == c4_labeling

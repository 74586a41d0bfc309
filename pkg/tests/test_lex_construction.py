from __future__ import annotations

import pytest

from app.common.exceptions import InvalidOrderError, MalformedLabelingError
from app.services.constructions.cycle import cycle_labeling
from app.services.constructions.lexicographic import (
    check_lex_conditions,
    check_lex_profile,
    lex_labeling,
    lex_vertex_sum,
)
from app.services.graph import families
from app.services.graph.products import lex_product
from app.services.labeling.labeling import EdgeLabeling
from app.services.labeling.matrix import to_matrix
from app.services.labeling.verifier import verify
from app.services.theorem_suite import worked_c4_o3_matrix


def test_worked_c4_blow_up(c4_labeling):
    h = lex_labeling(c4_labeling.graph, c4_labeling, 3)
    report = verify(h.graph, h)

    assert h.graph == lex_product(families.cycle(4), families.null(3))
    assert report.is_local_antimagic
    assert report.colors == [57, 111, 165]
    assert h.vertex_sums[3] == 57


def test_worked_c4_blow_up_matrix(c4_labeling):
    h = lex_labeling(c4_labeling.graph, c4_labeling, 3)
    text = to_matrix(h.graph, h).to_text()

    assert text == worked_c4_o3_matrix().to_text()
    assert text.splitlines()[0] == "* * * 8 1 6 * * * 35 28 33"


def test_vertex_sum_law_holds_for_any_bijection():
    g = families.wheel(4)
    f = EdgeLabeling.from_labels(g, range(1, g.q + 1))
    for n in (3, 4, 5):
        h = lex_labeling(g, f, n)
        assert h.is_bijection
        for u in range(g.p):
            for j in range(n):
                assert h.vertex_sum(u * n + j) == lex_vertex_sum(f.vertex_sum(u), g.degree(u), n)


def test_lex_vertex_sum_values():
    assert lex_vertex_sum(5, 2, 3) == 111
    assert [lex_vertex_sum(c, d, 3) for c, d in [(11, 3), (15, 3), (20, 4)]] == [261, 369, 492]


def test_regular_blow_up_keeps_color_count():
    f = cycle_labeling(5)
    h = lex_labeling(f.graph, f, 3)
    assert verify(h.graph, h).color_count == 3


def test_order_two_is_experimental_but_still_a_bijection(c4_labeling):
    h = lex_labeling(c4_labeling.graph, c4_labeling, 2)

    assert h.graph.q == 16
    assert h.is_bijection


def test_blow_up_input_checks(c4):
    f = EdgeLabeling.from_labels(c4, [1, 4, 2, 3])
    with pytest.raises(InvalidOrderError):
        lex_labeling(c4, f, 1)
    with pytest.raises(MalformedLabelingError):
        lex_labeling(c4, EdgeLabeling.from_labels(c4, [1, 1, 2, 3]), 3)
    with pytest.raises(MalformedLabelingError):
        lex_labeling(families.path(5), f, 3)


def test_conditions_hold_for_worked_labeling(c4_labeling):
    result = check_lex_conditions(c4_labeling.graph, c4_labeling, 3)
    assert result.holds
    assert result.condition is None


def test_wheel_profile_passes():
    assert check_lex_profile([(11, 3), (15, 3), (20, 4)], 3).holds


def test_equal_colors_on_different_degrees():
    result = check_lex_profile([(5, 2), (7, 2), (5, 3)], 3)

    assert not result.holds
    assert result.condition == "i"
    assert result.witness == (0, 2)


def test_different_colors_that_collide_after_blow_up():
    # 27 * 13 - 12 * 11 == 27 * 9 - 12 * 2 == 219
    result = check_lex_profile([(13, 11), (9, 2)], 3)

    assert not result.holds
    assert result.condition == "ii"
    assert result.witness == (0, 1)
    assert check_lex_profile([(13, 11), (9, 2)], 4).holds


def test_conditions_need_order_three(c4_labeling):
    with pytest.raises(InvalidOrderError):
        check_lex_conditions(c4_labeling.graph, c4_labeling, 2)

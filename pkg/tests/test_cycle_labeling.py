from __future__ import annotations

import pytest

from app.common.exceptions import InvalidSpecError
from app.services.constructions.cycle import cycle_labeling, cycle_pattern, position_weight
from app.services.labeling.verifier import verify


def test_pattern_alternates_high_and_low():
    assert cycle_pattern(4) == (4, 1, 3, 2)
    assert cycle_pattern(5) == (5, 1, 4, 2, 3)
    assert cycle_pattern(6) == (6, 1, 5, 2, 4, 3)
    assert sorted(cycle_pattern(11)) == list(range(1, 12))


def test_position_weights():
    assert [position_weight(i, 6) for i in range(1, 7)] == [9, 7, 6, 7, 6, 7]
    assert [position_weight(i, 5) for i in range(1, 6)] == [8, 6, 5, 6, 5]


@pytest.mark.parametrize(
    "n, sums",
    [
        (3, (5, 4, 3)),
        (4, (6, 5, 4, 5)),
        (5, (8, 6, 5, 6, 5)),
    ],
)
def test_small_cycles(n, sums):
    f = cycle_labeling(n)

    assert f.vertex_sums == sums
    assert f.label_of(0, 1) == n
    assert verify(f.graph, f).is_local_antimagic


def test_labels_follow_the_cycle_order():
    f = cycle_labeling(5)
    along = [f.label_of(i, (i + 1) % 5) for i in range(5)]
    assert along == [5, 1, 4, 2, 3]


def test_three_colors_up_to_two_hundred():
    for n in range(3, 201):
        f = cycle_labeling(n)
        report = verify(f.graph, f)
        assert report.is_local_antimagic
        assert report.colors == sorted({2 * n - n // 2, n + 1, n})


def test_short_cycles_are_rejected():
    for n in (0, 1, 2):
        with pytest.raises(InvalidSpecError):
            cycle_labeling(n)

import pytest
from fastapi.testclient import TestClient

from app.services.graph import families
from app.services.theorem_suite import (
    bowtie,
    five_cycle,
    worked_c4_labeling,
    two_triangles_and_square,
)


@pytest.fixture
def c4():
    return families.cycle(4)


@pytest.fixture
def c4_labeling():
    """C4 with u1u2 = 1, u2u3 = 2, u3u4 = 3, u4u1 = 4; sums (5, 3, 5, 7)."""
    return worked_c4_labeling()


@pytest.fixture
def bowtie_instance():
    return bowtie()


@pytest.fixture
def five_cycle_instance():
    return five_cycle()


@pytest.fixture
def square_instance():
    return two_triangles_and_square()


@pytest.fixture
def k24_two_color_labeling():
    """K_{2,4} where every vertex of the large side sums to 9 and both hubs to 18."""
    from app.services.labeling.labeling import EdgeLabeling

    g = families.complete_bipartite(2, 4)
    return EdgeLabeling.from_mapping(
        g,
        {
            (0, 2): 1, (0, 3): 7, (0, 4): 6, (0, 5): 4,
            (1, 2): 8, (1, 3): 2, (1, 4): 3, (1, 5): 5,
        },
    )


@pytest.fixture
def small_budget(monkeypatch):
    from app.config.config import settings

    monkeypatch.setattr(settings, "SOLVER_NODE_BUDGET", 5)
    return settings.SOLVER_NODE_BUDGET


@pytest.fixture
def client():
    from app.main import app

    with TestClient(app) as test_client:
        yield test_client

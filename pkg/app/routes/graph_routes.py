from fastapi import APIRouter

from app.common.exceptions import AntimagicError
from app.routes.errors import http_error
from app.schemas.graph_schemas import FamilySpec, GraphAnalysisResponse, GraphPayload
from app.services.graph.analysis import analyze
from app.services.graph.families import generate
from app.services.graph.graph import Graph

router = APIRouter(prefix="/api/v1/graphs", tags=["graphs"])


@router.post("/generate", response_model=GraphPayload)
def generate_graph(spec: FamilySpec):
    """
    Generate the canonical graph of a named family.

    Args:
        spec (FamilySpec): Family tag and parameters.

    Returns:
        GraphPayload: Vertex count and canonical edge list.
    """
    try:
        return generate(spec).to_payload()
    except AntimagicError as exc:
        raise http_error(exc)


@router.post("/analyze", response_model=GraphAnalysisResponse)
def analyze_graph(payload: GraphPayload):
    """Degrees, bipartition, chromatic number and an Euler tour when one exists."""
    try:
        return analyze(Graph.from_payload(payload))
    except AntimagicError as exc:
        raise http_error(exc)

from fastapi import APIRouter

from app.common.exceptions import AntimagicError
from app.routes.errors import http_error
from app.schemas.labeling_schemas import LabeledGraphPayload, LexRequest, VerificationReport
from app.services.constructions.lexicographic import lex_labeling
from app.services.graph.graph import Graph
from app.services.labeling.labeling import EdgeLabeling
from app.services.labeling.verifier import verify

router = APIRouter(prefix="/api/v1/labelings", tags=["labelings"])


def _labeling(payload: LabeledGraphPayload) -> EdgeLabeling:
    g = Graph.from_edges(payload.p, payload.edges)
    if len(payload.labels) != len(payload.edges):
        return EdgeLabeling.from_labels(g, payload.labels)
    return EdgeLabeling.from_mapping(g, dict(zip(payload.edges, payload.labels)))


@router.post("/verify", response_model=VerificationReport)
def verify_labeling(payload: LabeledGraphPayload):
    """
    Check a labeling and report its colors.

    Args:
        payload (LabeledGraphPayload): Graph plus one label per listed edge.

    Returns:
        VerificationReport: Bijection and properness flags, colors, violations.
    """
    try:
        f = _labeling(payload)
        return verify(f.graph, f)
    except AntimagicError as exc:
        raise http_error(exc)


@router.post("/lex", response_model=LabeledGraphPayload)
def lex_blow_up(request: LexRequest):
    """Block labeling of G[O_n] built from a labeling of G."""
    try:
        f = _labeling(request.base)
        h = lex_labeling(f.graph, f, request.n)
        return h.to_labeled_payload(proper=verify(h.graph, h).is_local_antimagic)
    except AntimagicError as exc:
        raise http_error(exc)

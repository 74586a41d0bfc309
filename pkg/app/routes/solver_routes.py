from fastapi import APIRouter

from app.common.exceptions import AntimagicError
from app.config.config import settings
from app.routes.errors import http_error
from app.schemas.solver_schemas import SolveRequest, SolveResultResponse
from app.services.graph.graph import Graph
from app.services.solver.exact import chi_la_exact
from app.services.solver.oracle import naive_chi_la

router = APIRouter(prefix="/api/v1/solver", tags=["solver"])


@router.post("/solve", response_model=SolveResultResponse)
def solve(request: SolveRequest):
    """
    Exact local antimagic chromatic number of a small graph.

    Args:
        request (SolveRequest): Graph, optional node budget (HTTP_SOLVER_NODE_BUDGET
            when omitted), workers, oracle flag.

    Returns:
        SolveResultResponse: Status, value, bounds and the witness labeling.
    """
    try:
        g = Graph.from_payload(request.graph)
        result = (
            naive_chi_la(g)
            if request.oracle
            else chi_la_exact(
                g,
                budget=request.budget or settings.HTTP_SOLVER_NODE_BUDGET,
                workers=request.workers,
            )
        )
        return result.to_response()
    except AntimagicError as exc:
        raise http_error(exc)

from __future__ import annotations

from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field

from app.config.config import settings
from app.schemas.graph_schemas import GraphPayload
from app.schemas.labeling_schemas import LabelingPayload


class SolveStatus(str, Enum):
    EXACT = "exact"
    BUDGET_EXCEEDED = "budget_exceeded"
    UNDEFINED_NO_LABELING = "undefined_no_labeling"


class SolveRequest(BaseModel):
    graph: GraphPayload
    budget: Optional[int] = Field(default=None, ge=1, le=settings.HTTP_SOLVER_NODE_BUDGET)
    workers: Optional[int] = Field(default=None, ge=1, le=settings.HTTP_SOLVER_MAX_WORKERS)
    oracle: bool = False


class SolveResultResponse(BaseModel):
    status: SolveStatus
    chi_la: Optional[int] = None
    lower_bound: int = 0
    upper_bound: Optional[int] = None
    nodes_explored: int = 0
    witness: Optional[LabelingPayload] = None


class BoundsResponse(BaseModel):
    lower: int
    upper: Optional[int] = None
    lower_provenance: list[str] = Field(default_factory=list)
    upper_provenance: Optional[str] = None
    # color count per construction that produced a verified labeling
    candidates: dict[str, int] = Field(default_factory=dict)

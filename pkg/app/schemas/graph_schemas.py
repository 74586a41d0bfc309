from __future__ import annotations

from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field


class Family(str, Enum):
    CYCLE = "cycle"
    PATH = "path"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete_bipartite"
    NULL = "null"
    WHEEL = "wheel"
    MOBIUS_LADDER = "mobius_ladder"
    G_MN = "g_mn"


class FamilySpec(BaseModel):
    """
    Named graph family plus its integer parameters.

    `n` is the order-like parameter of every family (cycle length, rim size of the
    wheel, order 2m of the Mobius ladder, second index of G_{m,n}); `m` is only
    used by `complete_bipartite` (K_{m,n}) and `g_mn`.
    """

    family: Family
    n: int
    m: Optional[int] = None


class GraphPayload(BaseModel):
    p: int = Field(..., ge=0, description="Number of vertices")
    edges: list[tuple[int, int]] = Field(
        default_factory=list, description="0-based vertex pairs"
    )


class GraphAnalysisResponse(BaseModel):
    p: int
    q: int
    degrees: list[int]
    regular_degree: Optional[int] = None
    connected: bool
    bipartition: Optional[tuple[list[int], list[int]]] = None
    odd_closed_walk: Optional[list[int]] = None
    chromatic_number: Optional[int] = None
    euler_tour: Optional[list[int]] = None

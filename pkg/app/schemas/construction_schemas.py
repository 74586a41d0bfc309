from __future__ import annotations

from enum import Enum
from typing import Literal, Optional

from pydantic import BaseModel, Field


class PartsDescriptor(BaseModel):
    w: int = Field(..., ge=0, description="Hub vertex (the singleton part)")
    V2: list[int]
    V3: list[int]


class TripartiteParity(str, Enum):
    EVEN = "even"
    ODD = "odd"


class TrailKind(str, Enum):
    R = "R"
    S = "S"
    T = "T"


class LexConditionResult(BaseModel):
    holds: bool
    condition: Optional[Literal["i", "ii"]] = None
    witness: Optional[tuple[int, int]] = None
    detail: Optional[str] = None

from __future__ import annotations

from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field


class LabelingPayload(BaseModel):
    labels: list[int] = Field(..., description="Label per edge, canonical edge order")
    colors: list[int] = Field(default_factory=list)
    proper: Optional[bool] = None


class LabeledGraphPayload(BaseModel):
    """Graph and labeling keys in one document."""

    p: int = Field(..., ge=0)
    edges: list[tuple[int, int]] = Field(default_factory=list)
    labels: list[int]
    colors: list[int] = Field(default_factory=list)
    proper: Optional[bool] = None


class VerificationReport(BaseModel):
    is_bijection: bool
    is_proper: bool
    colors: list[int] = Field(default_factory=list)
    color_count: int = Field(..., ge=0)
    violations: list[tuple[int, int]] = Field(default_factory=list)
    vertex_sums: list[int] = Field(default_factory=list)
    # False when some component is a single edge (K2 has no local antimagic labeling)
    chi_la_defined: bool = True

    @property
    def is_local_antimagic(self) -> bool:
        return self.is_bijection and self.is_proper


class TwoColorCertificate(BaseModel):
    x: int
    y: int
    X: list[int]
    Y: list[int]
    half_total: int = Field(..., description="q(q+1)/2")


class FeasibilityVerdict(str, Enum):
    NECESSARY_CONDITIONS_FAIL = "necessary_conditions_fail"
    UNKNOWN = "unknown"


class FeasibilityCondition(str, Enum):
    NON_BIPARTITE = "non_bipartite"
    EQUAL_PARTS = "equal_parts"
    DIVISIBILITY = "divisibility"


class FeasibilityDecision(BaseModel):
    verdict: FeasibilityVerdict
    condition: Optional[FeasibilityCondition] = None
    reason: str


class LexRequest(BaseModel):
    base: LabeledGraphPayload
    n: int = Field(..., ge=2, description="Blow-up order of O_n")

from __future__ import annotations

from enum import Enum
from typing import Any, Optional

from pydantic import BaseModel, Field


class CheckKind(str, Enum):
    CONSTRUCT_VERIFY = "construct+verify"
    SOLVE_EXACT = "solve-exact"
    BOUND_CHAIN = "bound-chain"


class CaseStatus(str, Enum):
    PASSED = "passed"
    FAILED = "failed"
    # reported construction failure that the claim does not rule out
    DIAGNOSTIC = "diagnostic"


class TheoremCase(BaseModel):
    id: str = Field(..., description="Descriptive slug, e.g. 'lex/C4-O3'")
    claim: str
    kind: CheckKind
    expected: Any = None


class CaseOutcome(BaseModel):
    id: str
    kind: CheckKind
    status: CaseStatus
    expected: Any = None
    observed: Any = None
    detail: Optional[str] = None
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status != CaseStatus.FAILED


class SuiteReport(BaseModel):
    outcomes: list[CaseOutcome] = Field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(1 for o in self.outcomes if o.status == CaseStatus.PASSED)

    @property
    def failed(self) -> int:
        return sum(1 for o in self.outcomes if o.status == CaseStatus.FAILED)

    @property
    def diagnostics(self) -> int:
        return sum(1 for o in self.outcomes if o.status == CaseStatus.DIAGNOSTIC)

    @property
    def ok(self) -> bool:
        return self.failed == 0

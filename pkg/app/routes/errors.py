from __future__ import annotations

from fastapi import HTTPException, status

from app.common.exceptions import AntimagicError, BudgetExceededError
from app.config.logging import logger


def http_error(exc: AntimagicError) -> HTTPException:
    """413 for inputs beyond the configured limits, 422 for everything else."""
    code = (
        status.HTTP_413_REQUEST_ENTITY_TOO_LARGE
        if isinstance(exc, BudgetExceededError)
        else status.HTTP_422_UNPROCESSABLE_ENTITY
    )
    logger.info("request_rejected", error=type(exc).__name__, detail=str(exc))
    return HTTPException(status_code=code, detail=str(exc))

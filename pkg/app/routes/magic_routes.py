from typing import Optional

from fastapi import APIRouter, Query

from app.common.exceptions import AntimagicError
from app.routes.errors import http_error
from app.schemas.magic_schemas import MagicSquareResponse
from app.services.magic_service import magic_constant, magic_square, shifted_block

router = APIRouter(prefix="/api/v1/magic", tags=["magic"])


@router.get("/{n}", response_model=MagicSquareResponse)
def get_magic_square(
    n: int,
    block: Optional[int] = Query(default=None, ge=1),
    q: Optional[int] = Query(default=None, ge=1),
):
    """Magic square of order n, or its shifted block Omega_block out of q."""
    try:
        omega = magic_square(n)
        entries = omega.entries if block is None else shifted_block(omega, block, q or block)
        return MagicSquareResponse(
            n=n,
            magic_constant=magic_constant(n),
            block=block,
            entries=entries.tolist(),
        )
    except AntimagicError as exc:
        raise http_error(exc)

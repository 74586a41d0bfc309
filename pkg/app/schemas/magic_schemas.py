from __future__ import annotations

from typing import Optional

from pydantic import BaseModel


class MagicSquareResponse(BaseModel):
    n: int
    magic_constant: int
    block: Optional[int] = None
    entries: list[list[int]]

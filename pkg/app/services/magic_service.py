from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from app.common.exceptions import InternalInvariantError, InvalidLabelError, InvalidOrderError
from app.config.logging import logger


@dataclass(frozen=True, eq=False)
class MagicSquare:
    """n x n arrangement of 1..n^2 whose rows, columns and diagonals share one sum."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        array = np.array(self.entries, dtype=np.int64, copy=True)
        array.setflags(write=False)
        object.__setattr__(self, "entries", array)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MagicSquare):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    __hash__ = None  # type: ignore[assignment]

    @property
    def order(self) -> int:
        return int(self.entries.shape[0])

    @property
    def constant(self) -> int:
        return magic_constant(self.order)

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()

    def to_text(self) -> str:
        return grid_text(self.entries)


def grid_text(array: np.ndarray) -> str:
    return "".join(" ".join(str(int(x)) for x in row) + "\n" for row in array)


def magic_constant(n: int) -> int:
    if n < 1:
        raise InvalidOrderError(f"order must be >= 1, got {n}")
    return (n**3 + n) // 2


def is_magic(array: np.ndarray | list[list[int]]) -> bool:
    a = np.asarray(array, dtype=np.int64)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        return False
    n = a.shape[0]
    if not np.array_equal(np.sort(a, axis=None), np.arange(1, n * n + 1)):
        return False
    k = magic_constant(n)
    return bool(
        (a.sum(axis=0) == k).all()
        and (a.sum(axis=1) == k).all()
        and np.trace(a) == k
        and np.trace(np.fliplr(a)) == k
    )


def _siamese(n: int) -> np.ndarray:
    square = np.zeros((n, n), dtype=np.int64)
    i, j = 0, n // 2
    for value in range(1, n * n + 1):
        square[i, j] = value
        ni, nj = (i - 1) % n, (j + 1) % n
        if square[ni, nj]:
            ni, nj = (i + 1) % n, j
        i, j = ni, nj
    return square


def _doubly_even(n: int) -> np.ndarray:
    rows, cols = np.indices((n, n))
    square = rows * n + cols + 1
    flip = (rows % 4 == cols % 4) | ((rows % 4 + cols % 4) == 3)
    square[flip] = n * n + 1 - square[flip]
    return square.astype(np.int64)


_LUX_PATTERNS = {
    "L": np.array([[4, 1], [2, 3]], dtype=np.int64),
    "U": np.array([[1, 4], [2, 3]], dtype=np.int64),
    "X": np.array([[1, 4], [3, 2]], dtype=np.int64),
}


def _lux(n: int) -> np.ndarray:
    # n = 4k + 2; each cell of a Siamese square of order 2k+1 becomes a 2x2 block
    m = n // 2
    k = (m - 1) // 2
    base = _siamese(m)
    letters = [["L"] * m for _ in range(k + 1)] + [["U"] * m] + [["X"] * m for _ in range(k - 1)]
    letters[k][k], letters[k + 1][k] = "U", "L"

    square = np.zeros((n, n), dtype=np.int64)
    for r in range(m):
        for c in range(m):
            square[2 * r : 2 * r + 2, 2 * c : 2 * c + 2] = (
                4 * (base[r, c] - 1) + _LUX_PATTERNS[letters[r][c]]
            )
    return square


@lru_cache(maxsize=64)
def magic_square(n: int) -> MagicSquare:
    """Siamese for odd n, complement pattern for n = 0 mod 4, LUX for n = 2 mod 4."""
    if n < 3:
        raise InvalidOrderError(f"magic squares are built for n >= 3, got {n}")
    if n % 2:
        method, entries = "siamese", _siamese(n)
    elif n % 4 == 0:
        method, entries = "doubly_even", _doubly_even(n)
    else:
        method, entries = "lux", _lux(n)

    if not is_magic(entries):
        logger.error("magic_square_invalid", n=n, method=method)
        raise InternalInvariantError(f"{method} construction produced a non-magic square of order {n}")
    logger.debug("magic_square_built", n=n, method=method)
    return MagicSquare(entries)


def shifted_block(omega: MagicSquare, i: int, q: int) -> np.ndarray:
    """Omega_i = Omega + (i - 1) n^2, entries [(i-1)n^2 + 1, i n^2]."""
    if not 1 <= i <= q:
        raise InvalidLabelError(f"block index must lie in [1, {q}], got {i}")
    n = omega.order
    return omega.entries + (i - 1) * n * n

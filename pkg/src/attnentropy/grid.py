"""Square score grids and similarity-map extraction.

Grids are row-major with ``(x, y) = (row, col)``; every module in this
package shares that convention.  Numerical functions accept either a
:class:`Grid2D` or any array-like and return plain float64 arrays; the
``Grid2D`` container is the validated form used at file boundaries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, GridFormatError, ZeroNormError

MIN_SIDE = 2


def grid_values(g, min_side: int = MIN_SIDE) -> np.ndarray:
    """Coerce a Grid2D or array-like to a validated float64 k x k array."""
    if isinstance(g, Grid2D):
        return g.values
    arr = np.asarray(g, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionMismatchError(f"expected a square 2-D grid, got shape {arr.shape}")
    if arr.shape[0] < min_side:
        raise DimensionMismatchError(
            f"grid side must be >= {min_side}, got {arr.shape[0]}"
        )
    if not np.isfinite(arr).all():
        raise GridFormatError("grid contains non-finite values")
    return arr


class Grid2D:
    """A k x k grid of finite real scores (k >= 2)."""

    __slots__ = ("values",)

    def __init__(self, values):
        self.values = grid_values(values)

    @property
    def k(self) -> int:
        return self.values.shape[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Grid2D):
            return NotImplemented
        return np.array_equal(self.values, other.values)

    def __repr__(self) -> str:
        return f"Grid2D(k={self.k})"


@dataclass(frozen=True)
class HeadProjection:
    """One attention head's CLS-token query and the k x k field of patch keys.

    ``cls_query`` has shape (d,); ``patch_keys`` has shape (k, k, d).
    """

    cls_query: np.ndarray
    patch_keys: np.ndarray

    def __post_init__(self):
        q = np.asarray(self.cls_query, dtype=np.float64)
        keys = np.asarray(self.patch_keys, dtype=np.float64)
        if q.ndim != 1 or q.size < 1:
            raise DimensionMismatchError(f"cls_query must be a vector, got shape {q.shape}")
        if keys.ndim != 3 or keys.shape[0] != keys.shape[1]:
            raise DimensionMismatchError(
                f"patch_keys must have shape (k, k, d), got {keys.shape}"
            )
        if keys.shape[2] != q.shape[0]:
            raise DimensionMismatchError(
                f"query dim {q.shape[0]} != key dim {keys.shape[2]}"
            )
        if keys.shape[0] < MIN_SIDE:
            raise DimensionMismatchError(f"key grid side must be >= {MIN_SIDE}")
        if not (np.isfinite(q).all() and np.isfinite(keys).all()):
            raise GridFormatError("projection contains non-finite values")
        object.__setattr__(self, "cls_query", q)
        object.__setattr__(self, "patch_keys", keys)

    @property
    def d(self) -> int:
        return self.cls_query.shape[0]

    @property
    def k(self) -> int:
        return self.patch_keys.shape[0]


def similarity_map(proj: HeadProjection) -> np.ndarray:
    """Scaled dot products between the CLS query and every patch key.

    Returns the k x k map with cell ``(x, y) = <q, key[x, y]> / sqrt(d)``.
    Values are pre-softmax scores and may be negative.
    """
    return proj.patch_keys @ proj.cls_query / math.sqrt(proj.d)


def cosine_similarity_map(proj: HeadProjection) -> np.ndarray:
    """Cosine similarity between the CLS query and every patch key, in [-1, 1]."""
    qn = np.linalg.norm(proj.cls_query)
    if qn == 0.0:
        raise ZeroNormError("cls_query has zero norm")
    key_norms = np.linalg.norm(proj.patch_keys, axis=2)
    if (key_norms == 0.0).any():
        raise ZeroNormError("at least one patch key has zero norm")
    return proj.patch_keys @ proj.cls_query / (qn * key_norms)


def grid_mean(g) -> float:
    """Arithmetic mean over all k^2 cells."""
    return float(grid_values(g).mean())


def write_grid(g, path) -> None:
    """Write a grid in the line-oriented text format: a ``k`` header line,
    then k rows of k decimal values.  Values round-trip at full precision."""
    vals = grid_values(g)
    k = vals.shape[0]
    lines = [str(k)]
    lines.extend(" ".join(format(v, ".17g") for v in row) for row in vals)
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def read_grid(path) -> Grid2D:
    """Parse a grid text file written by :func:`write_grid`."""
    with open(path, "r", encoding="ascii") as fh:
        tokens = fh.read().split()
    if not tokens:
        raise GridFormatError(f"{path}: empty grid file")
    try:
        k = int(tokens[0])
    except ValueError as exc:
        raise GridFormatError(f"{path}: bad header {tokens[0]!r}") from exc
    if k < MIN_SIDE:
        raise GridFormatError(f"{path}: side {k} below minimum {MIN_SIDE}")
    if len(tokens) != 1 + k * k:
        raise GridFormatError(
            f"{path}: expected {k * k} values for side {k}, found {len(tokens) - 1}"
        )
    try:
        vals = np.array([float(t) for t in tokens[1:]], dtype=np.float64)
    except ValueError as exc:
        raise GridFormatError(f"{path}: non-numeric cell value") from exc
    if not np.isfinite(vals).all():
        raise GridFormatError(f"{path}: non-finite cell value")
    return Grid2D(vals.reshape(k, k))

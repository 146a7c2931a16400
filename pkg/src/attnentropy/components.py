"""8-connected component labeling of a grid's positive support.

Two-pass scheme: pass one assigns provisional labels to horizontal runs
of support cells and records equivalences between runs that touch under
8-connectivity (same column or diagonal in adjacent rows); a union-find
resolves the equivalences; pass two relabels components 1..count in
raster order of each component's first (topmost, then leftmost) cell.
The run decomposition only batches the horizontal neighbor decision of
the classic cell-wise scan; the labeling it produces is identical.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .grid import Grid2D, grid_values


@dataclass
class ComponentLabeling:
    """Partition of a grid's support into 8-connected components.

    ``labels`` is a k x k int array, 0 = background, 1..count = component
    ids in raster order of first cell.  ``sizes[j]`` is the cell count of
    component ``j + 1``.
    """

    labels: np.ndarray
    count: int
    sizes: np.ndarray = field(repr=False)

    @cached_property
    def masks(self) -> list[Grid2D]:
        """Binary 0/1 grids, one per component, pairwise disjoint."""
        return [
            Grid2D((self.labels == j).astype(np.float64))
            for j in range(1, self.count + 1)
        ]

    def support_size(self) -> int:
        return int(self.sizes.sum())


def _resolve_roots(parent: list[int]) -> np.ndarray:
    """Collapse a union-find parent list to per-node roots (vectorized)."""
    root = np.asarray(parent, dtype=np.int64)
    while True:
        nxt = root[root]
        if np.array_equal(nxt, root):
            return root
        root = nxt


def connected_components(b, support_threshold: float = 0.0) -> ComponentLabeling:
    """Label the 8-connected components of ``{cells: value > support_threshold}``.

    Empty support yields ``count == 0`` with an all-zero label grid.
    """
    if support_threshold < 0:
        raise ValueError(f"support_threshold must be >= 0, got {support_threshold}")
    vals = grid_values(b)
    fg = vals > support_threshold
    k = fg.shape[0]

    if not fg.any():
        return ComponentLabeling(
            labels=np.zeros((k, k), dtype=np.int64),
            count=0,
            sizes=np.zeros(0, dtype=np.int64),
        )

    # Pass 1: provisional run ids in raster order (1-based on support).
    starts = fg.copy()
    starts[:, 1:] &= ~fg[:, :-1]
    run_id = np.cumsum(starts.ravel(), dtype=np.int64).reshape(fg.shape)
    prov = np.where(fg, run_id, 0)
    n_runs = int(starts.sum())

    # Equivalences between runs touching across adjacent rows (col offsets
    # -1, 0, +1 give the full 8-neighborhood once horizontal runs are merged).
    up, lo = prov[:-1, :], prov[1:, :]
    pair_codes = []
    for a, c in ((up, lo), (up[:, :-1], lo[:, 1:]), (up[:, 1:], lo[:, :-1])):
        m = (a > 0) & (c > 0)
        if m.any():
            pair_codes.append(a[m] * np.int64(n_runs + 1) + c[m])

    parent = list(range(n_runs + 1))
    if pair_codes:
        codes = np.unique(np.concatenate(pair_codes))
        for code in codes.tolist():
            i, j = divmod(code, n_runs + 1)
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            while parent[j] != j:
                parent[j] = parent[parent[j]]
                j = parent[j]
            if i != j:
                if i < j:
                    parent[j] = i
                else:
                    parent[i] = j

    rooted = _resolve_roots(parent)[prov]

    # Pass 2: renumber roots 1..count by first raster occurrence.
    flat = rooted.ravel()
    uniq, first = np.unique(flat[flat > 0], return_index=True)
    order = np.argsort(first)
    lut = np.zeros(n_runs + 1, dtype=np.int64)
    lut[uniq[order]] = np.arange(1, uniq.size + 1)
    labels = lut[rooted]
    count = int(uniq.size)
    sizes = np.bincount(labels.ravel(), minlength=count + 1)[1:]
    return ComponentLabeling(labels=labels, count=count, sizes=sizes)


def largest_components(labeling: ComponentLabeling, n: int, weights) -> list[int]:
    """Ids of the ``n`` components with the largest total weight.

    Weight of a component is the sum of ``weights`` over its mask; ties
    break toward the smaller id.  ``n`` beyond ``count`` returns all ids.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    w = grid_values(weights)
    if w.shape != labeling.labels.shape:
        from .errors import DimensionMismatchError

        raise DimensionMismatchError(
            f"weights shape {w.shape} != labels shape {labeling.labels.shape}"
        )
    if labeling.count == 0:
        return []
    masses = np.bincount(
        labeling.labels.ravel(), weights=w.ravel(), minlength=labeling.count + 1
    )[1:]
    ids = np.arange(1, labeling.count + 1)
    order = np.lexsort((ids, -masses))
    return ids[order[: min(n, labeling.count)]].tolist()
